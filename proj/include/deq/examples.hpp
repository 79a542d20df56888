#pragma once

#include <string>

#include "deq/dimodule.hpp"
#include "deq/tensor_ops.hpp"

namespace deq {

/// f⊗g with f = [[a,1],[0,a]], g = [[b,c],[0,b]]; a, b, c are literals of the field.
EndoPair jordan_example(const Field& field, const std::string& a = "a", const std::string& b = "b",
                       const std::string& c = "c");
/// Hopf-equation solution with parameter q.
EndoPair r_q_example(const Field& field, const std::string& q = "q");
/// f⊗g with f = diag(1,0), g = diag(2,3).
EndoPair projection_example(const Field& field);
/// q-Yang-Baxter operator; q must be invertible.
EndoPair yb_example(const Field& field, const std::string& q = "q");
/// [[a,0,0,0],[0,b,c,0],[0,d,e,0],[0,0,0,f]]; a D-solution iff c = d = 0.
EndoPair block_example(const Field& field, const std::string& a, const std::string& b, const std::string& c,
                       const std::string& d, const std::string& e, const std::string& f);
/// R of the S₃ coset-graded dimodule (n = 4).
EndoPair s3_graded_example(const Field& field);

}  // namespace deq
