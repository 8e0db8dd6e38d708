#include "ehrhart/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ehrhart/lattice_enum.hpp"
#include "ehrhart/linalg.hpp"
#include "ehrhart/lp.hpp"

namespace ehrhart {

namespace {

Rat rat_det(RatMatrix m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    Rat inv = 1 / m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

// Hyperplane through d affinely independent points in R^d: a . x = b with
// primitive integer a.
std::pair<IntVector, Int> hyperplane_through(const std::vector<const LatticePoint*>& pts) {
  const std::size_t d = pts.front()->size();
  if (d == 1) {  // a facet is a single point; rat_kernel needs >= 1 row
    IntVector a{Int(1)};
    return {std::move(a), Int((*pts[0])[0])};
  }
  RatMatrix diffs(pts.size() - 1, RatVector(d));
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < d; ++j)
      diffs[i - 1][j] = Rat((*pts[i])[j] - (*pts[0])[j]);
  auto kernel = rat_kernel(diffs);
  if (kernel.size() != 1)
    throw std::logic_error("facet points do not span a hyperplane");
  IntVector a = primitive(kernel.front());
  Int b = dot(a, *pts[0]);
  return {std::move(a), std::move(b)};
}

}  // namespace

PointConfig lattice_point_config(const Polytope& p) {
  if (!p.is_full_dimensional())
    throw std::invalid_argument("configuration requires a full-dimensional polytope");
  PointConfig c;
  c.dim = p.ambient_dim();
  PointSet pts = enumerate_points(p, 1);
  c.points.assign(pts.points().begin(), pts.points().end());
  return c;
}

Int simplex_normalized_volume(const PointConfig& c, const Simplex& s) {
  const std::size_t d = c.dim;
  if (s.size() != d + 1) throw std::invalid_argument("simplex has wrong size");
  IntMatrix m(d + 1, d + 1);
  for (std::size_t r = 0; r < d + 1; ++r) {
    m.at(r, 0) = 1;
    for (std::size_t j = 0; j < d; ++j) m.at(r, j + 1) = c.points[s[r]][j];
  }
  return abs(det_bareiss(m));
}

std::vector<std::size_t> lex_order(const PointConfig& c) {
  std::vector<std::size_t> order(c.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c.points[a] < c.points[b];
  });
  return order;
}

Triangulation placing_triangulation(const PointConfig& c,
                                    const std::vector<std::size_t>& order) {
  const std::size_t n = c.points.empty() ? 0 : c.points.front().size();
  if (order.empty()) throw std::invalid_argument("empty insertion order");

  LatticePoint base;
  std::vector<IntVector> dirs;           // affine basis directions, original coords
  std::map<std::size_t, RatVector> coords;  // per processed point, length r
  std::vector<Simplex> simplices;

  auto sign_det = [&](const std::vector<std::size_t>& facet, std::size_t extra) {
    const std::size_t r = dirs.size();
    RatMatrix m(facet.size() + 1, RatVector(r + 1));
    for (std::size_t row = 0; row <= facet.size(); ++row) {
      std::size_t idx = row < facet.size() ? facet[row] : extra;
      m[row][0] = 1;
      const RatVector& t = coords.at(idx);
      for (std::size_t j = 0; j < r; ++j) m[row][j + 1] = t[j];
    }
    Rat d = rat_det(m);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
  };

  bool first = true;
  for (std::size_t idx : order) {
    const LatticePoint& p = c.points[idx];
    if (first) {
      base = p;
      coords[idx] = {};
      simplices.push_back({idx});
      first = false;
      continue;
    }
    // Coordinates of p in the current affine basis, if it lies in the span.
    RatMatrix a(n, RatVector(dirs.size()));
    for (std::size_t j = 0; j < dirs.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) a[i][j] = Rat(dirs[j][i]);
    RatVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = Rat(p[i] - base[i]);
    auto t = rat_solve(a, rhs);

    if (!t) {
      // Dimension grows: cone the whole complex over the new point.
      IntVector dir(n);
      for (std::size_t i = 0; i < n; ++i) dir[i] = p[i] - base[i];
      dirs.push_back(std::move(dir));
      for (auto& [_, tc] : coords) tc.push_back(Rat(0));
      RatVector e(dirs.size(), Rat(0));
      e.back() = 1;
      coords[idx] = std::move(e);
      for (auto& s : simplices) {
        s.push_back(idx);
        std::sort(s.begin(), s.end());
      }
      continue;
    }
    coords[idx] = *t;
    if (dirs.empty()) continue;  // duplicate of the base point

    // Boundary facets visible from the new point.
    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> facets;
    for (std::size_t si = 0; si < simplices.size(); ++si)
      for (std::size_t v = 0; v < simplices[si].size(); ++v) {
        std::vector<std::size_t> f = simplices[si];
        f.erase(f.begin() + v);
        facets[f].push_back({si, simplices[si][v]});
      }
    std::vector<Simplex> added;
    for (const auto& [f, occ] : facets) {
      if (occ.size() != 1) continue;
      int sp = sign_det(f, idx);
      int sq = sign_det(f, occ.front().second);
      if (sp * sq < 0) {
        Simplex s = f;
        s.push_back(idx);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }
  if (dirs.size() != c.dim)
    throw std::invalid_argument("point configuration does not span dimension");
  std::sort(simplices.begin(), simplices.end());
  return Triangulation{std::move(simplices)};
}

Int normalized_volume(const PointConfig& c) {
  Triangulation t = placing_triangulation(c, lex_order(c));
  Int vol = 0;
  for (const auto& s : t.simplices) vol += simplex_normalized_volume(c, s);
  return vol;
}

namespace {

bool valid_with_volume(const PointConfig& c, const Triangulation& t, const Int& vol) {
  const std::size_t d = c.dim;
  if (t.simplices.empty()) return false;
  Int sum = 0;
  for (const auto& s : t.simplices) {
    if (s.size() != d + 1 || !std::is_sorted(s.begin(), s.end())) return false;
    for (auto i : s)
      if (i >= c.points.size()) return false;
    Int v = simplex_normalized_volume(c, s);
    if (v == 0) return false;
    sum += v;
  }
  if (sum != vol) return false;

  std::map<std::vector<std::size_t>, std::vector<std::size_t>> ridges;
  for (const auto& s : t.simplices)
    for (std::size_t v = 0; v < s.size(); ++v) {
      std::vector<std::size_t> f = s;
      f.erase(f.begin() + v);
      ridges[f].push_back(s[v]);
    }
  for (const auto& [f, opposite] : ridges) {
    if (opposite.size() > 2) return false;
    std::vector<const LatticePoint*> pts;
    for (auto i : f) pts.push_back(&c.points[i]);
    auto [a, b] = hyperplane_through(pts);
    auto side = [&](std::size_t i) {
      Int v = dot(a, c.points[i]) - b;
      return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    if (opposite.size() == 2) {
      if (side(opposite[0]) * side(opposite[1]) >= 0) return false;
    } else {
      int s0 = side(opposite[0]);
      if (s0 == 0) return false;
      for (std::size_t i = 0; i < c.points.size(); ++i) {
        int si = side(i);
        if (si != 0 && si != s0) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_valid_triangulation(const PointConfig& c, const Triangulation& t) {
  return valid_with_volume(c, t, normalized_volume(c));
}

HStarVector hstar_halfopen(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  if (!p.is_full_dimensional())
    throw std::invalid_argument("hstar_halfopen needs a full-dimensional polytope");
  HStarVector h;
  h.d = d;
  h.coeffs.assign(d + 1, Int(0));
  if (d == 0) {
    h.coeffs[0] = 1;
    return h;
  }
  PointConfig c = lattice_point_config(p);
  Triangulation t = placing_triangulation(c, lex_order(c));

  // Reference point: vertex average, perturbed by the symbolic direction
  // (eps, eps^2, ..., eps^d) to break ties exactly.
  const auto& verts = p.vertices();
  RatVector ref(d, Rat(0));
  for (const auto& v : verts)
    for (std::size_t j = 0; j < d; ++j) ref[j] += Rat(v[j]);
  for (std::size_t j = 0; j < d; ++j) ref[j] /= Rat(verts.size());

  // Sign of a . (ref + (eps, eps^2, ...)) - b: first nonzero among
  // (a.ref - b, a_1, ..., a_d).
  auto perturbed_sign = [&](const IntVector& a, const Int& b) {
    Rat v = -Rat(b);
    for (std::size_t j = 0; j < d; ++j) v += Rat(a[j]) * ref[j];
    if (v != 0) return v > 0 ? 1 : -1;
    for (std::size_t j = 0; j < d; ++j)
      if (a[j] != 0) return a[j] > 0 ? 1 : -1;
    throw std::logic_error("zero facet normal");
  };

  for (const auto& s : t.simplices) {
    // Excluded facets: those whose hyperplane strictly separates the
    // (perturbed) reference point from the simplex.
    std::vector<bool> excluded(d + 1, false);
    for (std::size_t i = 0; i <= d; ++i) {
      std::vector<const LatticePoint*> fpts;
      for (std::size_t j = 0; j <= d; ++j)
        if (j != i) fpts.push_back(&c.points[s[j]]);
      auto [a, b] = hyperplane_through(fpts);
      Int at_opp = dot(a, c.points[s[i]]);
      if (at_opp > b) {  // orient so the simplex satisfies a . x <= b
        for (auto& x : a) x = -x;
        b = -b;
      }
      excluded[i] = perturbed_sign(a, b) > 0;
    }

    // Box points of the half-open fundamental parallelepiped, via SNF of
    // the homogenized vertex matrix (columns (1, w_i)).
    IntMatrix w(d + 1, d + 1);
    for (std::size_t col = 0; col <= d; ++col) {
      w.at(0, col) = 1;
      for (std::size_t j = 0; j < d; ++j) w.at(j + 1, col) = c.points[s[col]][j];
    }
    SnfResult sn = snf(w);
    std::vector<Int> diag(d + 1);
    for (std::size_t i = 0; i <= d; ++i) diag[i] = sn.s.at(i, i);

    // lambda = sum_j (m_j / s_j) * v.col(j), m_j in [0, s_j); then each
    // coordinate is reduced into [0,1) (included facet) or (0,1] (excluded).
    std::vector<Int> m(d + 1, Int(0));
    for (;;) {
      RatVector lambda(d + 1, Rat(0));
      for (std::size_t j = 0; j <= d; ++j) {
        if (m[j] == 0) continue;
        Rat f(m[j], diag[j]);
        f.canonicalize();
        for (std::size_t i = 0; i <= d; ++i) lambda[i] += f * Rat(sn.v.at(i, j));
      }
      Rat height = 0;
      for (std::size_t i = 0; i <= d; ++i) {
        Rat fl;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), lambda[i].get_num().get_mpz_t(),
                   lambda[i].get_den().get_mpz_t());
        Rat frac = lambda[i] - Rat(q);
        if (excluded[i] && frac == 0) frac = 1;
        height += frac;
      }
      if (height.get_den() != 1)
        throw std::logic_error("non-integral box point height");
      Int ht = height.get_num();
      if (ht < 0 || ht > Int(d))
        throw std::logic_error("box point height out of range");
      h.coeffs[mpz_get_ui(ht.get_mpz_t())] += 1;

      // next mixed-radix value
      std::size_t pos = 0;
      while (pos <= d) {
        m[pos] += 1;
        if (m[pos] < diag[pos]) break;
        m[pos] = 0;
        ++pos;
      }
      if (pos > d) break;
    }
  }
  if (h.coeffs[0] != 1)
    throw std::logic_error("half-open decomposition does not tile: h*_0 != 1");
  return h;
}

UnimodularityReport all_spanning_simplices_unimodular(const Polytope& p) {
  PointConfig c = lattice_point_config(p);
  const std::size_t d = c.dim, n = c.points.size();
  UnimodularityReport report;
  report.all_unimodular = true;
  if (n < d + 1) throw std::logic_error("configuration does not span");

  std::vector<std::size_t> idx(d + 1);
  for (std::size_t i = 0; i <= d; ++i) idx[i] = i;
  for (;;) {
    Int v = simplex_normalized_volume(c, idx);
    if (v > 1) {
      report.all_unimodular = false;
      report.violations.push_back(idx);
    }
    // next combination
    std::size_t i = d + 1;
    while (i-- > 0) {
      if (idx[i] != i + n - (d + 1)) {
        ++idx[i];
        for (std::size_t j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return report;
    }
  }
}

namespace {

// Dependence vectors of the circuits of the configuration, from the
// kernel of the homogenized point matrix (corank <= 2).
std::vector<IntVector> circuit_vectors(const PointConfig& c) {
  const std::size_t n = c.points.size(), d = c.dim;
  RatMatrix m(d + 1, RatVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    m[0][j] = 1;
    for (std::size_t i = 0; i < d; ++i) m[i + 1][j] = Rat(c.points[j][i]);
  }
  auto kernel = rat_kernel(m);
  if (kernel.size() > 2)
    throw std::invalid_argument("configuration too large: more than dim+3 points");
  std::vector<IntVector> out;
  auto normalize = [](IntVector v) {
    make_primitive(v);
    for (const Int& x : v) {
      if (x > 0) break;
      if (x < 0) {
        for (Int& y : v) y = -y;
        break;
      }
    }
    return v;
  };
  if (kernel.empty()) return out;
  if (kernel.size() == 1) {
    out.push_back(normalize(primitive(kernel[0])));
    return out;
  }
  IntVector u = primitive(kernel[0]), v = primitive(kernel[1]);
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0 && v[i] == 0) continue;
    IntVector w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = v[i] * u[j] - u[i] * v[j];
    bool nonzero = false;
    for (const Int& x : w) nonzero |= x != 0;
    if (!nonzero) continue;
    seen.insert(normalize(std::move(w)));
  }
  // Keep only minimal supports.
  auto support = [](const IntVector& w) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) s.push_back(j);
    return s;
  };
  for (const auto& w : seen) {
    auto sw = support(w);
    bool minimal = true;
    for (const auto& o : seen) {
      if (o == w) continue;
      auto so = support(o);
      if (so.size() < sw.size() &&
          std::includes(sw.begin(), sw.end(), so.begin(), so.end()))
        minimal = false;
    }
    if (minimal) out.push_back(w);
  }
  return out;
}

std::optional<Triangulation> try_flip(const PointConfig& c, const Triangulation& t,
                                      const IntVector& z, const Int& vol) {
  std::vector<std::size_t> cp, cm, circ;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] > 0) cp.push_back(i);
    if (z[i] < 0) cm.push_back(i);
    if (z[i] != 0) circ.push_back(i);
  }
  if (cp.empty() || cm.empty()) return std::nullopt;

  std::set<std::vector<std::size_t>> links;
  bool first = true;
  for (std::size_t j : cp) {
    std::vector<std::size_t> r;
    for (std::size_t i : circ)
      if (i != j) r.push_back(i);
    std::set<std::vector<std::size_t>> lj;
    for (const auto& s : t.simplices) {
      if (!std::includes(s.begin(), s.end(), r.begin(), r.end())) continue;
      std::vector<std::size_t> link;
      std::set_difference(s.begin(), s.end(), r.begin(), r.end(),
                          std::back_inserter(link));
      lj.insert(std::move(link));
    }
    if (lj.empty()) return std::nullopt;
    if (first) {
      links = std::move(lj);
      first = false;
    } else if (lj != links) {
      return std::nullopt;
    }
  }

  std::set<Simplex> cells(t.simplices.begin(), t.simplices.end());
  for (std::size_t j : cp)
    for (const auto& link : links) {
      Simplex cell;
      for (std::size_t i : circ)
        if (i != j) cell.push_back(i);
      cell.insert(cell.end(), link.begin(), link.end());
      std::sort(cell.begin(), cell.end());
      cells.erase(cell);
    }
  for (std::size_t j : cm)
    for (const auto& link : links) {
      Simplex cell;
      for (std::size_t i : circ)
        if (i != j) cell.push_back(i);
      cell.insert(cell.end(), link.begin(), link.end());
      std::sort(cell.begin(), cell.end());
      if (cell.size() != c.dim + 1) return std::nullopt;
      if (std::adjacent_find(cell.begin(), cell.end()) != cell.end())
        return std::nullopt;
      cells.insert(std::move(cell));
    }
  Triangulation result{std::vector<Simplex>(cells.begin(), cells.end())};
  if (!valid_with_volume(c, result, vol)) return std::nullopt;
  return result;
}

std::optional<std::vector<Triangulation>> enumerate_impl(
    const PointConfig& c, std::optional<std::chrono::seconds> budget) {
  if (c.points.size() > c.dim + 3)
    throw std::invalid_argument("configuration too large: more than dim+3 points");
  auto start = std::chrono::steady_clock::now();
  Int vol = normalized_volume(c);
  Triangulation t0 = placing_triangulation(c, lex_order(c));

  std::vector<IntVector> circuits = circuit_vectors(c);
  std::set<Triangulation> seen{t0};
  std::vector<Triangulation> frontier{t0};
  while (!frontier.empty()) {
    if (budget &&
        std::chrono::steady_clock::now() - start > *budget)
      return std::nullopt;
    Triangulation t = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& z : circuits) {
      for (int dir = 0; dir < 2; ++dir) {
        IntVector zz = z;
        if (dir == 1)
          for (Int& x : zz) x = -x;
        auto flipped = try_flip(c, t, zz, vol);
        if (flipped && seen.insert(*flipped).second)
          frontier.push_back(std::move(*flipped));
      }
    }
  }
  return std::vector<Triangulation>(seen.begin(), seen.end());
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(const PointConfig& c) {
  return *enumerate_impl(c, std::nullopt);
}

bool is_regular(const PointConfig& c, const Triangulation& t) {
  const std::size_t n = c.points.size(), d = c.dim;
  // Variables: heights w_0..w_{n-1}, slack s. Maximize s subject to the
  // strict folding conditions written with margin s; regular iff the
  // optimum is positive. s <= 1 pins the scale.
  LpProblem lp;
  lp.c.assign(n + 1, Rat(0));
  lp.c[n] = 1;
  {
    RatVector row(n + 1, Rat(0));
    row[n] = 1;
    lp.a.push_back(std::move(row));
    lp.b.push_back(Rat(1));
  }

  auto barycentric = [&](const Simplex& s, std::size_t pt) -> std::optional<RatVector> {
    RatMatrix a(d + 1, RatVector(d + 1));
    RatVector rhs(d + 1);
    for (std::size_t col = 0; col <= d; ++col) {
      a[0][col] = 1;
      for (std::size_t i = 0; i < d; ++i) a[i + 1][col] = Rat(c.points[s[col]][i]);
    }
    rhs[0] = 1;
    for (std::size_t i = 0; i < d; ++i) rhs[i + 1] = Rat(c.points[pt][i]);
    return rat_solve(a, rhs);
  };

  std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> ridges;
  for (std::size_t si = 0; si < t.simplices.size(); ++si)
    for (std::size_t v = 0; v < t.simplices[si].size(); ++v) {
      std::vector<std::size_t> f = t.simplices[si];
      f.erase(f.begin() + v);
      ridges[f].push_back({si, t.simplices[si][v]});
    }
  for (const auto& [f, occ] : ridges) {
    if (occ.size() != 2) continue;
    const Simplex& s1 = t.simplices[occ[0].first];
    std::size_t q2 = occ[1].second;
    auto lambda = barycentric(s1, q2);
    if (!lambda) throw std::logic_error("degenerate simplex in triangulation");
    // sum lambda_i w(s1_i) - w(q2) + s <= 0
    RatVector row(n + 1, Rat(0));
    for (std::size_t i = 0; i <= d; ++i) row[s1[i]] += (*lambda)[i];
    row[q2] -= 1;
    row[n] = 1;
    lp.a.push_back(std::move(row));
    lp.b.push_back(Rat(0));
  }

  // Unused points must lift strictly above the simplex that contains them.
  std::vector<bool> used(n, false);
  for (const auto& s : t.simplices)
    for (auto i : s) used[i] = true;
  for (std::size_t pt = 0; pt < n; ++pt) {
    if (used[pt]) continue;
    bool located = false;
    for (const auto& s : t.simplices) {
      auto mu = barycentric(s, pt);
      if (!mu) continue;
      bool inside = true;
      for (const auto& m : *mu)
        if (m < 0) inside = false;
      if (!inside) continue;
      RatVector row(n + 1, Rat(0));
      for (std::size_t i = 0; i <= d; ++i) row[s[i]] += (*mu)[i];
      row[pt] -= 1;
      row[n] = 1;
      lp.a.push_back(std::move(row));
      lp.b.push_back(Rat(0));
      located = true;
      break;
    }
    if (!located) throw std::logic_error("unused point not covered by triangulation");
  }

  LpOutcome out = lp_solve(lp);
  return out.status == LpStatus::kOptimal && out.value > 0;
}

bool is_unimodular(const PointConfig& c, const Triangulation& t) {
  for (const auto& s : t.simplices)
    if (simplex_normalized_volume(c, s) != 1) return false;
  return true;
}

bool is_flag(const PointConfig& c, const Triangulation& t) {
  const std::size_t n = c.points.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& s : t.simplices)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        adj[s[i]][s[j]] = adj[s[j]][s[i]] = true;

  auto is_face = [&](const std::vector<std::size_t>& clique) {
    for (const auto& s : t.simplices)
      if (std::includes(s.begin(), s.end(), clique.begin(), clique.end()))
        return true;
    return false;
  };

  // Expand cliques in index order; every clique of the skeleton must be
  // a face of the complex.
  auto expand = [&](auto&& self, std::vector<std::size_t>& clique) -> bool {
    for (std::size_t v = clique.back() + 1; v < n; ++v) {
      bool joined = true;
      for (auto u : clique)
        if (!adj[u][v]) joined = false;
      if (!joined) continue;
      clique.push_back(v);
      bool ok = is_face(clique) && self(self, clique);
      clique.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::size_t> clique{u};
    if (!expand(expand, clique)) return false;
  }
  return true;
}

QuadraticVerdict exists_quadratic_triangulation(
    const Polytope& p, std::optional<std::chrono::seconds> budget) {
  QuadraticVerdict verdict;
  PointConfig c = lattice_point_config(p);
  if (c.points.size() > c.dim + 3) {
    verdict.status = QuadraticVerdict::Status::kUndecided;
    return verdict;
  }
  auto all = enumerate_impl(c, budget);
  if (!all) {
    verdict.status = QuadraticVerdict::Status::kUndecided;
    return verdict;
  }
  verdict.status = QuadraticVerdict::Status::kNo;
  for (const auto& t : *all) {
    TriangulationProperties props;
    props.t = t;
    props.unimodular = is_unimodular(c, t);
    props.regular = is_regular(c, t);
    props.flag = is_flag(c, t);
    if (props.regular && props.unimodular && props.flag &&
        verdict.status != QuadraticVerdict::Status::kYes) {
      verdict.status = QuadraticVerdict::Status::kYes;
      verdict.witness = t;
    }
    verdict.table.push_back(std::move(props));
  }
  return verdict;
}

}  // namespace ehrhart
