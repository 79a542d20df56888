#include "deq/examples.hpp"

#include <memory>

namespace deq {

EndoPair jordan_example(const Field& field, const std::string& a, const std::string& b, const std::string& c) {
  return product_solution(Matrix::from_rows(field, {{a, "1"}, {"0", a}}), Matrix::from_rows(field, {{b, c}, {"0", b}}));
}

EndoPair r_q_example(const Field& field, const std::string& q) {
  const std::string p = "(" + q + ")";
  return EndoPair(Matrix::from_rows(
      field, {{"0", "-" + p, "0", "-" + p + "^2"}, {"0", "1", "0", p}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}}));
}

EndoPair projection_example(const Field& field) {
  return product_solution(Matrix::from_rows(field, {{"1", "0"}, {"0", "0"}}),
                          Matrix::from_rows(field, {{"2", "0"}, {"0", "3"}}));
}

EndoPair yb_example(const Field& field, const std::string& q) {
  const std::string p = "(" + q + ")";
  return EndoPair(Matrix::from_rows(
      field, {{p, "0", "0", "0"}, {"0", "1", p + " - 1/" + p, "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", p}}));
}

EndoPair block_example(const Field& field, const std::string& a, const std::string& b, const std::string& c,
                       const std::string& d, const std::string& e, const std::string& f) {
  return EndoPair(
      Matrix::from_rows(field, {{a, "0", "0", "0"}, {"0", b, c, "0"}, {"0", d, e, "0"}, {"0", "0", "0", f}}));
}

EndoPair s3_graded_example(const Field& field) {
  const CayleyTable s3 = symmetric_group(3);
  const auto h = std::make_shared<const FinBialgebra>(group_bialgebra(field, s3));
  return r_from_dimodule(dimodule_from_grading(coset_graded_example(h, s3)));
}

}  // namespace deq
