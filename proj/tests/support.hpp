// Shared helpers for the test binaries: seeded random generators and small
// constructors that keep the test bodies readable.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "deq/matrix.hpp"
#include "deq/tensor_ops.hpp"

namespace deq::testing {

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  switch (f.kind()) {
    case FieldKind::prime: {
      std::uniform_int_distribution<long long> d(0, f.characteristic() - 1);
      return f.from_integer(d(rng));
    }
    case FieldKind::rationals: {
      std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
      return f.from_rational(mpq_class(num(rng), static_cast<unsigned long>(den(rng))));
    }
    case FieldKind::rational_functions: {
      // small polynomial over the declared variables divided by another
      std::uniform_int_distribution<long> c(-3, 3);
      auto poly = [&] {
        Scalar s = f.from_integer(c(rng));
        for (const auto& v : *f.vars()) {
          s += f.from_integer(c(rng)) * f.variable(v);
          if (rng() % 3 == 0) s += f.from_integer(c(rng)) * f.variable(v) * f.variable(v);
        }
        return s;
      };
      Scalar den = poly();
      while (den.is_zero()) den = poly();
      return rng() % 2 ? poly() : poly() / den;
    }
  }
  return f.zero();
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(f, rng);
  }
  return m;
}

inline Vector vec(const Field& f, std::initializer_list<long long> xs) {
  Vector v(f, xs.size());
  std::size_t i = 0;
  for (auto x : xs) v[i++] = f.from_integer(x);
  return v;
}

inline Matrix mat(const Field& f, const std::vector<std::vector<std::string>>& rows) {
  return Matrix::from_rows(f, rows);
}

inline EndoPair random_endo(const Field& f, std::size_t n, std::mt19937_64& rng) {
  return EndoPair(random_matrix(f, n * n, n * n, rng));
}

/// The F_2, n = 2 operator whose serialized entry r*4+c is bit r*4+c of mask.
inline EndoPair f2_candidate(std::uint32_t mask) {
  const Field f2 = Field::prime(2);
  Matrix m(f2, 4, 4);
  for (std::size_t e = 0; e < 16; ++e) {
    if (mask >> e & 1u) m(e / 4, e % 4) = f2.one();
  }
  return EndoPair(std::move(m));
}

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix u = random_matrix(f, n, n, rng);
    if (matrix_inverse(u)) return u;
  }
}

}  // namespace deq::testing
