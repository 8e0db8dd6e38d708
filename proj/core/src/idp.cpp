#include "ehrhart/idp.hpp"

#include <atomic>
#include <mutex>

#include "ehrhart/linalg.hpp"

namespace ehrhart {

namespace {

// z (a point of (k+1)P) decomposes iff z - x lies in kP for some lattice
// point x of P. Probing the facet system avoids materializing kP.
bool decomposes_i64(const std::int64_t* z, const std::vector<std::vector<std::int64_t>>& pts,
                    const std::vector<std::vector<std::int64_t>>& facet_normals,
                    const std::vector<std::int64_t>& facet_offsets, long k) {
  const std::size_t d = pts.empty() ? 0 : pts.front().size();
  for (const auto& x : pts) {
    bool inside = true;
    for (std::size_t f = 0; f < facet_normals.size() && inside; ++f) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d; ++j) s += facet_normals[f][j] * (z[j] - x[j]);
      if (s > facet_offsets[f] * k) inside = false;
    }
    if (inside) return true;
  }
  return false;
}

bool decomposes_mpz(const LatticePoint& z, const std::vector<LatticePoint>& pts,
                    const std::vector<HalfSpace>& facets, long k) {
  for (const auto& x : pts) {
    bool inside = true;
    for (const auto& f : facets) {
      Int s = 0;
      for (std::size_t j = 0; j < z.size(); ++j) s += f.normal[j] * (z[j] - x[j]);
      if (s > f.offset * k) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

}  // namespace

IdpVerdict is_idp(const Polytope& p, const IdpOptions& opts) {
  if (!p.is_full_dimensional())
    throw std::invalid_argument("is_idp needs a lattice-normalized polytope");
  const long d = static_cast<long>(p.ambient_dim());
  const long k_max = opts.k_max.value_or(d - 2);

  IdpVerdict verdict;
  if (k_max < 1) {  // d <= 2: vacuously IDP
    verdict.holds = true;
    return verdict;
  }

  PointSet base = enumerate_points(p, 1);
  std::vector<LatticePoint> pts(base.points().begin(), base.points().end());
  const auto& facets = p.facets();

  std::vector<std::vector<std::int64_t>> pts64;
  std::vector<std::vector<std::int64_t>> fn64;
  std::vector<std::int64_t> fo64;
  bool narrow = true;
  const Int lim = (Int(1) << 56);
  for (const auto& x : pts) {
    std::vector<std::int64_t> row;
    for (const auto& c : x) {
      if (abs(c) > lim) narrow = false;
      row.push_back(mpz_get_si(c.get_mpz_t()));
    }
    pts64.push_back(std::move(row));
  }
  for (const auto& f : facets) {
    std::vector<std::int64_t> row;
    Int reach = abs(f.offset);
    for (const auto& c : f.normal) {
      reach += abs(c);
      row.push_back(mpz_get_si(c.get_mpz_t()));
    }
    if (reach > lim) narrow = false;
    fn64.push_back(std::move(row));
    fo64.push_back(mpz_get_si(f.offset.get_mpz_t()));
  }

  for (long k = 1; k <= k_max; ++k) {
    std::mutex mu;
    std::optional<LatticePoint> witness;
    if (narrow) {
      bool ok = visit_points_i64(
          p, k + 1,
          [&](const std::int64_t* z, std::size_t n) {
            if (witness) return;
            if (!decomposes_i64(z, pts64, fn64, fo64, k)) {
              std::lock_guard<std::mutex> lock(mu);
              if (!witness) {
                LatticePoint w(n);
                for (std::size_t j = 0; j < n; ++j) w[j] = static_cast<long>(z[j]);
                witness = std::move(w);
              }
            }
          },
          opts.threads);
      if (!ok) narrow = false;
    }
    if (!narrow) {
      visit_points(p, k + 1, [&](const LatticePoint& z) {
        if (witness) return;
        if (!decomposes_mpz(z, pts, facets, k)) witness = z;
      });
    }
    if (witness) {
      verdict.holds = false;
      verdict.failure_witness = {k, *witness};
      return verdict;
    }
    verdict.checked_k.push_back(k);
  }
  verdict.holds = true;
  return verdict;
}

bool idp_necessary_conditions(const Polytope& p) {
  PointSet pts = enumerate_points(p, 1);
  std::vector<LatticePoint> v(pts.points().begin(), pts.points().end());
  if (affine_dimension(v) != p.ambient_dim()) return false;
  PointSet level2 = enumerate_points(p, 2);
  return minkowski_covers(pts, pts, level2).covered;
}

}  // namespace ehrhart
