#pragma once

#include <random>

#include "ehrhart/polytope.hpp"

namespace ehrhart::testing {

inline LatticePoint pt(std::initializer_list<long> vals) {
  LatticePoint p;
  for (long v : vals) p.push_back(Int(v));
  return p;
}

/// Seeded random full-dimensional lattice polytope with small coordinates.
inline Polytope random_polytope(std::mt19937_64& rng, std::size_t dim,
                                std::size_t npoints, long range) {
  std::uniform_int_distribution<long> coord(-range, range);
  for (;;) {
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < npoints; ++i) {
      LatticePoint p(dim);
      for (std::size_t j = 0; j < dim; ++j) p[j] = Int(coord(rng));
      pts.push_back(std::move(p));
    }
    Polytope poly(dim, std::move(pts));
    if (poly.dim() == dim) return poly;
  }
}

/// Random affine unimodular map built from elementary integer operations.
inline AffineUnimodularMap random_unimodular_map(std::mt19937_64& rng,
                                                 std::size_t dim) {
  IntMatrix u = IntMatrix::identity(dim);
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int ops = 0; ops < 12; ++ops) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      if (coef(rng) < 0)  // negate a row
        for (std::size_t k = 0; k < dim; ++k) u.at(i, k) = -u.at(i, k);
      continue;
    }
    Int c(coef(rng));  // row_i += c * row_j
    for (std::size_t k = 0; k < dim; ++k) u.at(i, k) += c * u.at(j, k);
  }
  AffineUnimodularMap m;
  m.u = std::move(u);
  m.t.resize(dim);
  std::uniform_int_distribution<long> tr(-3, 3);
  for (std::size_t k = 0; k < dim; ++k) m.t[k] = Int(tr(rng));
  return m;
}

}  // namespace ehrhart::testing
