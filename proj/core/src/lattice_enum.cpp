#include "ehrhart/lattice_enum.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ehrhart/lp.hpp"

namespace ehrhart {

bool PointSet::insert(LatticePoint p) {
  if (p.size() != dim_) throw std::invalid_argument("point dimension mismatch");
  return points_.insert(std::move(p)).second;
}

namespace {

// Bound tower: levels[i] constrains coordinate i given a fixed prefix
// x_0..x_{i-1}.  Row means  sum_j a[j] x_j <= k * b  with a[i] != 0.
// The level-i system is the facet system of the projection of P onto the
// first i+1 coordinates (projection of conv(V) = conv of projected V),
// so every value inside the bounds extends to a full point; dilation by k
// only scales the right-hand side.
struct TowerRow {
  IntVector a;  // length i+1
  Int b;
};
using Tower = std::vector<std::vector<TowerRow>>;

Tower build_tower(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  Tower tower(d);
  const auto& verts = p.vertices();
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<HalfSpace> facets;
    if (i + 1 == d) {
      facets = p.facets();
    } else {
      std::vector<LatticePoint> proj;
      for (const auto& v : verts)
        proj.emplace_back(v.begin(), v.begin() + i + 1);
      std::sort(proj.begin(), proj.end());
      proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
      facets = facet_enumeration(proj, i + 1);
    }
    for (auto& f : facets) {
      if (f.normal[i] == 0) continue;  // implied by the level below
      TowerRow row;
      row.a = std::move(f.normal);
      row.b = std::move(f.offset);
      tower[i].push_back(std::move(row));
    }
  }
  return tower;
}

// int64 fast path when all partial sums provably fit.
struct TowerRow64 {
  std::vector<std::int64_t> a;
  std::int64_t kb;
};
using Tower64 = std::vector<std::vector<TowerRow64>>;

bool try_narrow(const Tower& tower, const Polytope& p, long k, Tower64& out) {
  // Coordinate ranges of kP from the vertex bounding box.
  const std::size_t d = p.ambient_dim();
  std::vector<Int> maxabs(d, Int(0));
  for (const auto& v : p.vertices())
    for (std::size_t j = 0; j < d; ++j) {
      Int a = abs(v[j]) * k;
      if (a > maxabs[j]) maxabs[j] = a;
    }
  const Int limit = Int(1) << 61;
  out.assign(d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& row : tower[i]) {
      Int reach = abs(row.b) * k;
      for (std::size_t j = 0; j <= i; ++j) reach += abs(row.a[j]) * maxabs[j];
      if (reach >= limit) return false;
      TowerRow64 r64;
      r64.kb = mpz_get_si(Int(row.b * k).get_mpz_t());
      for (std::size_t j = 0; j <= i; ++j)
        r64.a.push_back(mpz_get_si(row.a[j].get_mpz_t()));
      out[i].push_back(std::move(r64));
    }
  }
  return true;
}

// floor(a/b), b > 0
inline std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}
inline std::int64_t cdiv(std::int64_t a, std::int64_t b) {
  return -fdiv(-a, b);
}

// Feasible interval for coordinate `level` given the prefix in x.
template <typename Row, typename Input>
bool bounds_at(const std::vector<Row>& rows, const std::vector<Input>& x,
               std::size_t level, Input& lo, Input& hi, bool strict) {
  bool have_lo = false, have_hi = false;
  for (const auto& row : rows) {
    Input s = 0;
    for (std::size_t j = 0; j < level; ++j) s += row.a[j] * x[j];
    Input rhs;
    if constexpr (std::is_same_v<Input, std::int64_t>)
      rhs = row.kb - s;
    else
      rhs = row.b_times_k - s;
    const auto& c = row.a[level];
    if (c > 0) {
      Input v;
      if (strict) {
        // a x < rhs  =>  x <= ceil(rhs/c) - 1 when exact else floor
        if constexpr (std::is_same_v<Input, std::int64_t>)
          v = cdiv(rhs, c) - 1;
        else {
          mpz_cdiv_q(v.get_mpz_t(), rhs.get_mpz_t(), c.get_mpz_t());
          v -= 1;
        }
      } else {
        if constexpr (std::is_same_v<Input, std::int64_t>)
          v = fdiv(rhs, c);
        else
          mpz_fdiv_q(v.get_mpz_t(), rhs.get_mpz_t(), c.get_mpz_t());
      }
      if (!have_hi || v < hi) hi = v, have_hi = true;
    } else {
      Input nc = -c, nr = -rhs;  // x >= nr/nc
      Input v;
      if (strict) {
        if constexpr (std::is_same_v<Input, std::int64_t>)
          v = fdiv(nr, nc) + 1;
        else {
          mpz_fdiv_q(v.get_mpz_t(), nr.get_mpz_t(), nc.get_mpz_t());
          v += 1;
        }
      } else {
        if constexpr (std::is_same_v<Input, std::int64_t>)
          v = cdiv(nr, nc);
        else
          mpz_cdiv_q(v.get_mpz_t(), nr.get_mpz_t(), nc.get_mpz_t());
      }
      if (!have_lo || v > lo) lo = v, have_lo = true;
    }
  }
  if (!have_lo || !have_hi)
    throw std::logic_error("unbounded enumeration level");
  return lo <= hi;
}

struct TowerRowZ {
  IntVector a;
  Int b_times_k;
};
using TowerZ = std::vector<std::vector<TowerRowZ>>;

TowerZ scale_tower(const Tower& tower, long k) {
  TowerZ z(tower.size());
  for (std::size_t i = 0; i < tower.size(); ++i)
    for (const auto& row : tower[i])
      z[i].push_back({row.a, Int(row.b * k)});
  return z;
}

template <typename RowT, typename I>
void recurse(const std::vector<std::vector<RowT>>& tower, std::size_t level,
             std::vector<I>& x, const std::function<void(const std::vector<I>&)>& leaf) {
  I lo{}, hi{};
  if (!bounds_at(tower[level], x, level, lo, hi, false)) return;
  for (I v = lo; v <= hi; ++v) {
    x[level] = v;
    if (level + 1 == tower.size())
      leaf(x);
    else
      recurse(tower, level + 1, x, leaf);
  }
}

template <typename RowT, typename I>
Int count_rec(const std::vector<std::vector<RowT>>& tower, std::size_t level,
              std::vector<I>& x) {
  I lo{}, hi{};
  if (!bounds_at(tower[level], x, level, lo, hi, false)) return 0;
  if (level + 1 == tower.size()) return Int(hi - lo) + 1;
  Int total = 0;
  for (I v = lo; v <= hi; ++v) {
    x[level] = v;
    total += count_rec(tower, level + 1, x);
  }
  return total;
}

// Splits the top-level coordinate range into contiguous chunks.
template <typename I>
std::vector<std::pair<I, I>> chunk_range(I lo, I hi, int threads) {
  std::vector<std::pair<I, I>> chunks;
  I total = hi - lo + 1;
  I per = total / threads;
  I extra = total % threads;
  I cur = lo;
  for (int t = 0; t < threads && cur <= hi; ++t) {
    I len = per + (I(t) < extra ? 1 : 0);
    if (len <= 0) continue;
    chunks.push_back({cur, I(cur + len - 1)});
    cur += len;
  }
  return chunks;
}

// LP-based bounds: min/max coordinate `level` over the dilate with the
// prefix fixed. Slower but independent of the projection tower.
bool lp_bounds(const Polytope& p, long k, const std::vector<Int>& x,
               std::size_t level, Int& lo, Int& hi) {
  const auto& facets = p.facets();
  const std::size_t d = p.ambient_dim();
  LpProblem prob;
  for (const auto& f : facets) {
    RatVector row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = Rat(f.normal[j]);
    prob.a.push_back(std::move(row));
    prob.b.push_back(Rat(f.offset * k));
  }
  for (std::size_t j = 0; j < level; ++j) {
    RatVector row(d, Rat(0));
    row[j] = 1;
    prob.aeq.push_back(std::move(row));
    prob.beq.push_back(Rat(x[j]));
  }
  prob.c.assign(d, Rat(0));
  prob.c[level] = 1;
  prob.maximize = false;
  LpOutcome lo_out = lp_solve(prob);
  if (lo_out.status != LpStatus::kOptimal) return false;
  prob.maximize = true;
  LpOutcome hi_out = lp_solve(prob);
  if (hi_out.status != LpStatus::kOptimal) return false;
  mpz_cdiv_q(lo.get_mpz_t(), lo_out.value.get_num().get_mpz_t(),
             lo_out.value.get_den().get_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), hi_out.value.get_num().get_mpz_t(),
             hi_out.value.get_den().get_mpz_t());
  return lo <= hi;
}

void lp_recurse(const Polytope& p, long k, std::vector<Int>& x, std::size_t level,
                const std::function<void(const std::vector<Int>&)>& leaf) {
  Int lo, hi;
  if (!lp_bounds(p, k, x, level, lo, hi)) return;
  for (Int v = lo; v <= hi; ++v) {
    x[level] = v;
    if (level + 1 == p.ambient_dim())
      leaf(x);
    else
      lp_recurse(p, k, x, level + 1, leaf);
  }
}

void check_preconditions(const Polytope& p, long k) {
  if (k <= 0) throw std::invalid_argument("dilation factor must be positive");
  if (!p.is_full_dimensional())
    throw std::invalid_argument("polytope must be lattice-normalized (full-dimensional)");
}

}  // namespace

bool visit_points_i64(const Polytope& p, long k,
                      const std::function<void(const std::int64_t*, std::size_t)>& cb,
                      int threads) {
  check_preconditions(p, k);
  const std::size_t d = p.ambient_dim();
  if (d == 0) {
    cb(nullptr, 0);
    return true;
  }
  Tower tower = build_tower(p);
  Tower64 t64;
  if (!try_narrow(tower, p, k, t64)) return false;
  auto leaf = [&](const std::vector<std::int64_t>& x) { cb(x.data(), d); };
  if (threads <= 1 || d == 1) {
    std::vector<std::int64_t> x(d);
    recurse<TowerRow64, std::int64_t>(t64, 0, x, leaf);
    return true;
  }
  std::int64_t lo, hi;
  std::vector<std::int64_t> empty;
  if (!bounds_at(t64[0], empty, 0, lo, hi, false)) return true;
  auto chunks = chunk_range(lo, hi, threads);
  std::vector<std::thread> workers;
  for (auto [clo, chi] : chunks)
    workers.emplace_back([&, clo = clo, chi = chi] {
      std::vector<std::int64_t> x(d);
      for (std::int64_t v = clo; v <= chi; ++v) {
        x[0] = v;
        recurse<TowerRow64, std::int64_t>(t64, 1, x, leaf);
      }
    });
  for (auto& w : workers) w.join();
  return true;
}

void visit_points(const Polytope& p, long k,
                  const std::function<void(const LatticePoint&)>& cb,
                  const EnumOptions& opts) {
  check_preconditions(p, k);
  const std::size_t d = p.ambient_dim();
  if (d == 0) {
    cb(LatticePoint{});
    return;
  }
  if (opts.strategy == BoundStrategy::kLp) {
    std::vector<Int> x(d);
    lp_recurse(p, k, x, 0, cb);
    return;
  }
  bool done = visit_points_i64(
      p, k,
      [&](const std::int64_t* x, std::size_t n) {
        LatticePoint pt(n);
        for (std::size_t j = 0; j < n; ++j) pt[j] = static_cast<long>(x[j]);
        cb(pt);
      },
      opts.threads);
  if (done) return;
  Tower tower = build_tower(p);
  TowerZ tz = scale_tower(tower, k);
  std::vector<Int> x(d);
  recurse<TowerRowZ, Int>(tz, 0, x, cb);
}

PointSet enumerate_points(const Polytope& p, long k, const EnumOptions& opts) {
  check_preconditions(p, k);
  PointSet set(p.ambient_dim());
  std::mutex mu;
  visit_points(
      p, k,
      [&](const LatticePoint& pt) {
        std::lock_guard<std::mutex> lock(mu);
        set.insert(pt);
      },
      opts);
  return set;
}

Int count_points(const Polytope& p, long k, const EnumOptions& opts) {
  check_preconditions(p, k);
  const std::size_t d = p.ambient_dim();
  if (d == 0) return 1;
  if (opts.strategy == BoundStrategy::kLp) {
    Int n = 0;
    std::vector<Int> x(d);
    lp_recurse(p, k, x, 0, [&](const std::vector<Int>&) { n += 1; });
    return n;
  }
  Tower tower = build_tower(p);
  Tower64 t64;
  if (try_narrow(tower, p, k, t64)) {
    if (opts.threads <= 1 || d == 1) {
      std::vector<std::int64_t> x(d);
      return count_rec<TowerRow64, std::int64_t>(t64, 0, x);
    }
    std::int64_t lo, hi;
    std::vector<std::int64_t> empty;
    if (!bounds_at(t64[0], empty, 0, lo, hi, false)) return 0;
    auto chunks = chunk_range(lo, hi, opts.threads);
    std::vector<Int> partial(chunks.size(), Int(0));
    std::vector<std::thread> workers;
    for (std::size_t c = 0; c < chunks.size(); ++c)
      workers.emplace_back([&, c] {
        std::vector<std::int64_t> x(d);
        Int n = 0;
        for (std::int64_t v = chunks[c].first; v <= chunks[c].second; ++v) {
          x[0] = v;
          if (d == 1)
            n += 1;
          else
            n += count_rec<TowerRow64, std::int64_t>(t64, 1, x);
        }
        partial[c] = n;
      });
    for (auto& w : workers) w.join();
    Int total = 0;
    for (const auto& n : partial) total += n;
    return total;
  }
  TowerZ tz = scale_tower(tower, k);
  std::vector<Int> x(d);
  return count_rec<TowerRowZ, Int>(tz, 0, x);
}

PointSet enumerate_interior_points(const Polytope& p, long k) {
  check_preconditions(p, k);
  PointSet out(p.ambient_dim());
  if (p.ambient_dim() == 0) {
    out.insert(LatticePoint{});  // a 0-polytope is its own relative interior
    return out;
  }
  const auto& facets = p.facets();
  visit_points(p, k, [&](const LatticePoint& pt) {
    for (const auto& f : facets)
      if (dot(f.normal, pt) == f.offset * k) return;
    out.insert(pt);
  });
  return out;
}

CoverResult minkowski_covers(const PointSet& a, const PointSet& b,
                             const PointSet& target) {
  if (a.dim() != b.dim() || a.dim() != target.dim())
    throw std::invalid_argument("dimension mismatch");
  const PointSet& small = a.size() <= b.size() ? a : b;
  const PointSet& large = a.size() <= b.size() ? b : a;
  for (const auto& t : target.points()) {
    bool hit = false;
    LatticePoint diff(t.size());
    for (const auto& x : small.points()) {
      for (std::size_t j = 0; j < t.size(); ++j) diff[j] = t[j] - x[j];
      if (large.contains(diff)) {
        hit = true;
        break;
      }
    }
    if (!hit) return {false, t};
  }
  return {true, std::nullopt};
}

}  // namespace ehrhart
