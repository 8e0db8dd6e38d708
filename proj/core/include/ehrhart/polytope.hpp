#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ehrhart/int_matrix.hpp"
#include "ehrhart/linalg.hpp"

namespace ehrhart {

using LatticePoint = IntVector;

/// Closed halfspace normal . x <= offset with primitive integer normal.
struct HalfSpace {
  IntVector normal;
  Int offset;
  bool operator==(const HalfSpace&) const = default;
};

/// x -> u * x + t with |det u| = 1.
struct AffineUnimodularMap {
  IntMatrix u;
  IntVector t;
};

LatticePoint apply(const AffineUnimodularMap& m, const LatticePoint& x);

/// Isomorphism of aff(P) cap Z^n onto Z^d (the saturated affine lattice).
/// forward(x) = first d entries of (x - base) * v;  backward(t) = base + t * b
/// where b consists of the first d rows of v^{-1}.
struct LatticeProjection {
  LatticePoint base;
  IntMatrix v;      // n x n unimodular
  IntMatrix basis;  // d x n, rows span the saturated difference lattice
  std::size_t dim = 0;

  LatticePoint forward(const LatticePoint& x) const;
  LatticePoint backward(const LatticePoint& t) const;
};

std::size_t affine_dimension(const std::vector<LatticePoint>& points);

/// Exactly the points that are vertices of conv(points). A point is a
/// vertex iff it is not a convex combination of the others (decided by
/// exact LP). Duplicates are collapsed first.
std::vector<LatticePoint> vertex_reduce(const std::vector<LatticePoint>& points);

/// Irredundant facet list of a full-dimensional polytope given by its
/// vertices, by the double description method on the homogenization cone.
std::vector<HalfSpace> facet_enumeration(const std::vector<LatticePoint>& vertices,
                                         std::size_t dim);

class Polytope {
public:
  Polytope(std::size_t ambient_dim, std::vector<LatticePoint> generators);

  // Copies transfer the cached data; the mutex itself is not copied.
  Polytope(const Polytope& other);
  Polytope& operator=(const Polytope& other);
  Polytope(Polytope&& other) noexcept;
  Polytope& operator=(Polytope&& other) noexcept;

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<LatticePoint>& generators() const { return generators_; }

  const std::vector<LatticePoint>& vertices() const;
  std::size_t dim() const;
  /// Facets; requires the polytope to be full-dimensional.
  const std::vector<HalfSpace>& facets() const;

  bool is_full_dimensional() const { return dim() == ambient_dim_; }

private:
  std::size_t ambient_dim_;
  std::vector<LatticePoint> generators_;

  // Lazy caches, populated once under lock; immutable afterwards.
  mutable std::mutex cache_mutex_;
  mutable std::optional<std::vector<LatticePoint>> vertices_;
  mutable std::optional<std::size_t> dim_;
  mutable std::optional<std::vector<HalfSpace>> facets_;
};

struct NormalizeResult {
  Polytope polytope;  // full-dimensional image in Z^dim
  LatticeProjection map;
};

/// Re-embed p into Z^d, d = dim(p), via an isomorphism of the affine
/// lattice aff(p) cap Z^n. Lattice point counts of all dilations are
/// preserved. Full-dimensional input gets the identity transform.
NormalizeResult lattice_normalize(const Polytope& p);

Polytope apply(const AffineUnimodularMap& m, const Polytope& p);

/// Search for an affine unimodular map carrying the lattice points of p
/// bijectively onto those of q. Both inputs must be full-dimensional.
/// Cheap invariants are matched first, then a backtracking assignment of
/// an affine vertex basis, pruned by facet-incidence and edge-adjacency
/// signatures.
std::optional<AffineUnimodularMap> unimodular_equivalence(const Polytope& p,
                                                          const Polytope& q);

}  // namespace ehrhart
