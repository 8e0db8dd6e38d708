#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// Deduplicated set of lattice points of one dimension, with ordered
/// deterministic iteration.
class PointSet {
public:
  explicit PointSet(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool insert(LatticePoint p);
  bool contains(const LatticePoint& p) const { return points_.count(p) > 0; }
  const std::set<LatticePoint>& points() const { return points_; }

private:
  std::size_t dim_;
  std::set<LatticePoint> points_;
};

enum class BoundStrategy {
  kProjection,  // one-time tower of projected facet systems (default)
  kLp,          // per-node exact LP bounds
};

struct EnumOptions {
  int threads = 1;
  BoundStrategy strategy = BoundStrategy::kProjection;
};

/// All lattice points of the dilate kP. Requires p lattice-normalized
/// (full-dimensional) and k >= 1.
PointSet enumerate_points(const Polytope& p, long k, const EnumOptions& opts = {});

/// |kP cap Z^d| without materializing the points.
Int count_points(const Polytope& p, long k, const EnumOptions& opts = {});

/// Streaming enumeration; the callback may be invoked concurrently when
/// opts.threads > 1. Coordinates are handed out via a reusable buffer.
void visit_points(const Polytope& p, long k,
                  const std::function<void(const LatticePoint&)>& cb,
                  const EnumOptions& opts = {});

/// Streaming enumeration over native int64 coordinates. Returns false
/// (without calling cb) when the instance provably does not fit in 64-bit
/// arithmetic; callers then fall back to visit_points. With threads > 1
/// the callback runs concurrently.
bool visit_points_i64(const Polytope& p, long k,
                      const std::function<void(const std::int64_t*, std::size_t)>& cb,
                      int threads = 1);

/// Lattice points of kP satisfying every facet inequality strictly.
PointSet enumerate_interior_points(const Polytope& p, long k);

struct CoverResult {
  bool covered = false;
  std::optional<LatticePoint> witness;  // point of target not in a + b
};

/// Is target a subset of the Minkowski sum { x + y : x in a, y in b }?
CoverResult minkowski_covers(const PointSet& a, const PointSet& b,
                             const PointSet& target);

}  // namespace ehrhart
