#pragma once

#include "oracles.hpp"

#include "fmlat/core_ring.hpp"
#include "fmlat/matrix.hpp"
#include "fmlat/product_calculus.hpp"

#include <random>

namespace support {

inline fmlat::Matrix to_matrix(const oracle::M4& m) {
  fmlat::Matrix out(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m[i][j];
  return out;
}

inline fmlat::CohClass k3(fmlat::Rational r, fmlat::Rational s, fmlat::Rational t, fmlat::Rational p) {
  return fmlat::CohClass(std::move(r), {std::move(s), std::move(t)}, std::move(p));
}

// Small random rational in [-n, n] with denominator up to 3.
inline fmlat::Rational small_q(std::mt19937_64& rng, int n = 5) {
  std::uniform_int_distribution<int> num(-n, n), den(1, 3);
  return fmlat::Rational(num(rng), den(rng));
}

inline fmlat::CohClass random_class(std::mt19937_64& rng) {
  return k3(small_q(rng), small_q(rng), small_q(rng), small_q(rng));
}

inline fmlat::ProductClass random_product(std::mt19937_64& rng) {
  fmlat::ProductClass a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a.decomp(i, j) = small_q(rng, 3);
  for (auto& x : a.diag) x = small_q(rng, 3);
  return a;
}

}  // namespace support
