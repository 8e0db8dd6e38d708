#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "ehrhart/hstar.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// Ordered, affinely spanning point configuration in Z^d.
struct PointConfig {
  std::size_t dim = 0;
  std::vector<LatticePoint> points;  // distinct
};

/// Sorted index set of size dim+1 into a PointConfig.
using Simplex = std::vector<std::size_t>;

struct Triangulation {
  std::vector<Simplex> simplices;  // sorted, canonical
  bool operator==(const Triangulation&) const = default;
  bool operator<(const Triangulation& o) const { return simplices < o.simplices; }
};

/// The lattice points of p (p full-dimensional), in lexicographic order.
PointConfig lattice_point_config(const Polytope& p);

Int simplex_normalized_volume(const PointConfig& c, const Simplex& s);

/// Incremental (beneath-and-beyond) triangulation: insert points in
/// `order`, coning the facets visible from each new point; points inside
/// the hull built so far are skipped. Lower-dimensional prefixes are
/// handled by coning the whole complex when the dimension grows.
Triangulation placing_triangulation(const PointConfig& c,
                                    const std::vector<std::size_t>& order);

/// Insertion order used throughout: lexicographic on coordinates.
std::vector<std::size_t> lex_order(const PointConfig& c);

/// Normalized volume of conv(c), via the placing triangulation.
Int normalized_volume(const PointConfig& c);

/// Certificate: simplices nondegenerate, normalized volumes sum to the
/// volume of the hull, every ridge lies in exactly two simplices (on
/// opposite sides) or one (boundary-supporting).
bool is_valid_triangulation(const PointConfig& c, const Triangulation& t);

/// h* by the half-open decomposition of the placing triangulation of the
/// lattice points of p: a generic interior reference point (symbolic
/// lexicographic perturbation) makes each simplex half-open, and each
/// contributes its box-point height distribution. Independent of the
/// counting route; used as its cross-check oracle.
HStarVector hstar_halfopen(const Polytope& p);

struct UnimodularityReport {
  bool all_unimodular = false;
  std::vector<Simplex> violations;  // spanning subsets with |det| > 1
};

/// True iff every (d+1)-subset of lattice points of p with nonzero
/// homogenized determinant has |det| = 1. Since the simplices of any
/// triangulation of p are spanned by lattice points of p, a true answer
/// certifies that every triangulation of p is unimodular.
UnimodularityReport all_spanning_simplices_unimodular(const Polytope& p);

/// All triangulations reachable by bistellar flips from the placing
/// triangulation. Only configurations of at most dim+3 points are
/// accepted (corank <= 2, where the flip graph is known to be connected,
/// so the enumeration is exhaustive).
std::vector<Triangulation> enumerate_triangulations(const PointConfig& c);

/// Regularity via exact LP: heights with strictly positive folding slack
/// at every interior ridge (and every unused point lifted strictly above).
bool is_regular(const PointConfig& c, const Triangulation& t);

bool is_unimodular(const PointConfig& c, const Triangulation& t);

/// Every clique of the 1-skeleton is a face of the complex.
bool is_flag(const PointConfig& c, const Triangulation& t);

struct TriangulationProperties {
  Triangulation t;
  bool regular = false;
  bool unimodular = false;
  bool flag = false;
};

struct QuadraticVerdict {
  enum class Status { kYes, kNo, kUndecided } status = Status::kUndecided;
  std::optional<Triangulation> witness;
  std::vector<TriangulationProperties> table;
};

/// Enumerate all triangulations of the lattice-point configuration of p
/// and look for one that is simultaneously regular, unimodular and flag.
QuadraticVerdict exists_quadratic_triangulation(
    const Polytope& p,
    std::optional<std::chrono::seconds> budget = std::nullopt);

}  // namespace ehrhart
