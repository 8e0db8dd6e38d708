#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ehrhart/lattice_enum.hpp"
#include "ehrhart/lp.hpp"

namespace ehrhart {

LatticePoint apply(const AffineUnimodularMap& m, const LatticePoint& x) {
  const std::size_t n = m.u.rows();
  LatticePoint y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int s = m.t.empty() ? Int(0) : m.t[i];
    for (std::size_t j = 0; j < m.u.cols(); ++j) s += m.u.at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

LatticePoint LatticeProjection::forward(const LatticePoint& x) const {
  LatticePoint t(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < v.rows(); ++i)
      s += (x[i] - base[i]) * v.at(i, j);
    t[j] = s;
  }
  return t;
}

LatticePoint LatticeProjection::backward(const LatticePoint& t) const {
  LatticePoint x = base;
  for (std::size_t j = 0; j < basis.cols(); ++j)
    for (std::size_t i = 0; i < dim; ++i) x[j] += t[i] * basis.at(i, j);
  return x;
}

std::size_t affine_dimension(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw std::invalid_argument("empty point list");
  if (points.size() == 1) return 0;
  IntMatrix diffs(points.size() - 1, points.front().size());
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.front().size(); ++j)
      diffs.at(i - 1, j) = points[i][j] - points[0][j];
  return rank(diffs);
}

std::vector<LatticePoint> vertex_reduce(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw std::invalid_argument("empty point list");
  std::vector<LatticePoint> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return pts;
  const std::size_t n = pts.front().size();

  std::vector<LatticePoint> verts;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    // pts[k] in conv(others)?  exists lambda >= 0, sum = 1, sum l_i q_i = p
    RatMatrix aeq(n + 1, RatVector(pts.size() - 1));
    RatVector beq(n + 1);
    std::size_t col = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < n; ++j) aeq[j][col] = Rat(pts[i][j]);
      aeq[n][col] = 1;
      ++col;
    }
    for (std::size_t j = 0; j < n; ++j) beq[j] = Rat(pts[k][j]);
    beq[n] = 1;
    if (!lp_feasible_nonneg(aeq, beq)) verts.push_back(pts[k]);
  }
  return verts;
}

namespace {

struct Ray {
  IntVector r;
  std::vector<bool> tight;  // over the constraints inserted so far
};

// Exact inverse of a unimodular integer matrix.
IntMatrix int_inverse_unimodular(const IntMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a = to_rat(m);
  IntMatrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    RatVector e(n, Rat(0));
    e[col] = 1;
    auto x = rat_solve(a, e);
    if (!x) throw std::logic_error("matrix not invertible");
    for (std::size_t i = 0; i < n; ++i) {
      if ((*x)[i].get_den() != 1) throw std::logic_error("matrix not unimodular");
      inv.at(i, col) = (*x)[i].get_num();
    }
  }
  return inv;
}

}  // namespace

std::vector<HalfSpace> facet_enumeration(const std::vector<LatticePoint>& vertices,
                                         std::size_t dim) {
  if (vertices.empty()) throw std::invalid_argument("no vertices");
  const std::size_t n = vertices.front().size();
  if (dim != n)
    throw std::invalid_argument("facet_enumeration needs a full-dimensional input; lattice_normalize first");
  if (dim == 0) return {};
  const std::size_t h = dim + 1;  // homogenized dimension

  // Constraint rows w_i = (1, v_i); we compute the extreme rays of the
  // dual cone { y : w_i . y >= 0 }, which are the facets of cone(P).
  std::vector<IntVector> w(vertices.size(), IntVector(h));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    w[i][0] = 1;
    for (std::size_t j = 0; j < n; ++j) w[i][j + 1] = vertices[i][j];
  }

  // Initial simplicial cone from h linearly independent constraints.
  std::vector<std::size_t> init;
  {
    RatMatrix acc;
    for (std::size_t i = 0; i < w.size() && init.size() < h; ++i) {
      acc.push_back(RatVector(h));
      for (std::size_t j = 0; j < h; ++j) acc.back()[j] = Rat(w[i][j]);
      RatMatrix copy = acc;
      if (rref(copy).size() == acc.size())
        init.push_back(i);
      else
        acc.pop_back();
    }
    if (init.size() < h)
      throw std::invalid_argument("vertex set is not full-dimensional");
  }

  std::vector<Ray> rays;
  {
    IntMatrix w0(h, h);
    for (std::size_t r = 0; r < h; ++r)
      for (std::size_t j = 0; j < h; ++j) w0.at(r, j) = w[init[r]][j];
    RatMatrix a = to_rat(w0);
    for (std::size_t col = 0; col < h; ++col) {
      // w[init[r]] . ray_col = delta_{r,col} >= 0: the rays generate
      // exactly the dual of the initial simplicial cone.
      RatVector e(h, Rat(0));
      e[col] = 1;
      auto x = rat_solve(a, e);
      Ray ray;
      ray.r = primitive(*x);
      rays.push_back(std::move(ray));
    }
  }

  std::vector<std::size_t> inserted = init;
  auto recompute_tight = [&](Ray& ray) {
    ray.tight.assign(inserted.size(), false);
    for (std::size_t c = 0; c < inserted.size(); ++c)
      if (dot(w[inserted[c]], ray.r) == 0) ray.tight[c] = true;
  };
  for (auto& r : rays) recompute_tight(r);

  for (std::size_t cons = 0; cons < w.size(); ++cons) {
    if (std::find(init.begin(), init.end(), cons) != init.end()) continue;
    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(w[cons], rays[i].r);
      if (val[i] < 0) any_neg = true;
    }
    inserted.push_back(cons);
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        rays[i].tight.push_back(val[i] == 0);
      continue;
    }

    auto adjacent = [&](const Ray& a, const Ray& b) {
      std::vector<std::size_t> common;
      for (std::size_t c = 0; c + 1 < inserted.size(); ++c)
        if (a.tight[c] && b.tight[c]) common.push_back(c);
      if (common.size() < h - 2) return false;
      RatMatrix m(common.size(), RatVector(h));
      for (std::size_t r = 0; r < common.size(); ++r)
        for (std::size_t j = 0; j < h; ++j)
          m[r][j] = Rat(w[inserted[common[r]]][j]);
      return rat_rank(m) == h - 2;
    };

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) {
        rays[i].tight.push_back(val[i] == 0);
        next.push_back(rays[i]);
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] <= 0) continue;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (val[j] >= 0) continue;
        if (!adjacent(rays[i], rays[j])) continue;
        Ray nr;
        nr.r.resize(h);
        for (std::size_t t = 0; t < h; ++t)
          nr.r[t] = val[i] * rays[j].r[t] - val[j] * rays[i].r[t];
        make_primitive(nr.r);
        recompute_tight(nr);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<HalfSpace> facets;
  std::set<std::pair<IntVector, Int>> seen;
  for (const auto& ray : rays) {
    // y = (y0, yr) encodes the valid inequality (-yr) . x <= y0.
    HalfSpace hs;
    hs.normal.resize(n);
    for (std::size_t j = 0; j < n; ++j) hs.normal[j] = -ray.r[j + 1];
    hs.offset = ray.r[0];
    Int g = 0;
    for (const Int& x : hs.normal)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
      for (Int& x : hs.normal) x /= g;
      hs.offset /= g;  // exact: g divides the offset of any lattice facet
    }
    if (seen.insert({hs.normal, hs.offset}).second) facets.push_back(std::move(hs));
  }
  std::sort(facets.begin(), facets.end(),
            [](const HalfSpace& a, const HalfSpace& b) {
              return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
            });
  return facets;
}

Polytope::Polytope(std::size_t ambient_dim, std::vector<LatticePoint> generators)
    : ambient_dim_(ambient_dim), generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("polytope needs generators");
  for (const auto& g : generators_)
    if (g.size() != ambient_dim_)
      throw std::invalid_argument("generator dimension mismatch");
}

Polytope::Polytope(const Polytope& other) {
  std::lock_guard<std::mutex> lock(other.cache_mutex_);
  ambient_dim_ = other.ambient_dim_;
  generators_ = other.generators_;
  vertices_ = other.vertices_;
  dim_ = other.dim_;
  facets_ = other.facets_;
}

Polytope& Polytope::operator=(const Polytope& other) {
  if (this == &other) return *this;
  Polytope copy(other);
  return *this = std::move(copy);
}

Polytope::Polytope(Polytope&& other) noexcept
    : ambient_dim_(other.ambient_dim_),
      generators_(std::move(other.generators_)),
      vertices_(std::move(other.vertices_)),
      dim_(other.dim_),
      facets_(std::move(other.facets_)) {}

Polytope& Polytope::operator=(Polytope&& other) noexcept {
  ambient_dim_ = other.ambient_dim_;
  generators_ = std::move(other.generators_);
  vertices_ = std::move(other.vertices_);
  dim_ = other.dim_;
  facets_ = std::move(other.facets_);
  return *this;
}

const std::vector<LatticePoint>& Polytope::vertices() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!vertices_) vertices_ = vertex_reduce(generators_);
  return *vertices_;
}

std::size_t Polytope::dim() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!dim_) dim_ = affine_dimension(generators_);
  return *dim_;
}

const std::vector<HalfSpace>& Polytope::facets() const {
  const auto& verts = vertices();
  std::size_t d = dim();
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!facets_) facets_ = facet_enumeration(verts, d == ambient_dim_ ? ambient_dim_ : d);
  return *facets_;
}

NormalizeResult lattice_normalize(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  const std::size_t d = p.dim();
  LatticeProjection proj;
  proj.dim = d;
  if (d == n) {
    proj.base.assign(n, Int(0));
    proj.v = IntMatrix::identity(n);
    proj.basis = IntMatrix::identity(n);
    return {p, std::move(proj)};
  }
  const auto& gens = p.generators();
  proj.base = gens[0];
  IntMatrix diffs(std::max<std::size_t>(gens.size() - 1, 1), n);
  for (std::size_t i = 1; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      diffs.at(i - 1, j) = gens[i][j] - gens[0][j];
  SnfResult s = snf(diffs);
  proj.v = s.v;
  IntMatrix vinv = int_inverse_unimodular(s.v);
  proj.basis = IntMatrix(d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) proj.basis.at(i, j) = vinv.at(i, j);

  std::vector<LatticePoint> image;
  for (const auto& g : gens) {
    LatticePoint t = proj.forward(g);
    if (proj.backward(t) != g)
      throw std::logic_error("lattice_normalize round-trip failed");
    image.push_back(std::move(t));
  }
  return {Polytope(d, std::move(image)), std::move(proj)};
}

Polytope apply(const AffineUnimodularMap& m, const Polytope& p) {
  std::vector<LatticePoint> image;
  for (const auto& g : p.generators()) image.push_back(ehrhart::apply(m, g));
  return Polytope(m.u.rows(), std::move(image));
}

namespace {

struct VertexCombinatorics {
  std::vector<std::vector<bool>> incidence;       // vertex x facet
  std::vector<std::vector<std::size_t>> common;   // |T_i cap T_j|
  std::vector<std::vector<bool>> adjacent;        // edge graph
  std::vector<std::vector<std::size_t>> signature;  // per-vertex invariant
};

VertexCombinatorics combinatorics(const Polytope& p) {
  const auto& verts = p.vertices();
  const auto& facets = p.facets();
  const std::size_t nv = verts.size(), nf = facets.size(), d = p.dim();
  VertexCombinatorics c;
  c.incidence.assign(nv, std::vector<bool>(nf, false));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t f = 0; f < nf; ++f)
      c.incidence[i][f] = dot(facets[f].normal, verts[i]) == facets[f].offset;

  std::vector<std::size_t> facet_size(nf, 0);
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t i = 0; i < nv; ++i)
      if (c.incidence[i][f]) ++facet_size[f];

  c.common.assign(nv, std::vector<std::size_t>(nv, 0));
  c.adjacent.assign(nv, std::vector<bool>(nv, false));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j) {
      std::vector<std::size_t> shared;
      for (std::size_t f = 0; f < nf; ++f)
        if (c.incidence[i][f] && c.incidence[j][f]) shared.push_back(f);
      c.common[i][j] = c.common[j][i] = shared.size();
      if (shared.size() >= d - 1) {
        RatMatrix m(shared.size(), RatVector(p.ambient_dim()));
        for (std::size_t r = 0; r < shared.size(); ++r)
          for (std::size_t t = 0; t < p.ambient_dim(); ++t)
            m[r][t] = Rat(facets[shared[r]].normal[t]);
        bool adj = rat_rank(m) == d - 1;
        c.adjacent[i][j] = c.adjacent[j][i] = adj;
      }
    }

  c.signature.resize(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    std::vector<std::size_t> sig;
    for (std::size_t f = 0; f < nf; ++f)
      if (c.incidence[i][f]) sig.push_back(facet_size[f]);
    std::sort(sig.begin(), sig.end());
    std::size_t deg = 0;
    for (std::size_t j = 0; j < nv; ++j)
      if (c.adjacent[i][j]) ++deg;
    sig.push_back(1000000 + deg);
    c.signature[i] = std::move(sig);
  }
  return c;
}

}  // namespace

std::optional<AffineUnimodularMap> unimodular_equivalence(const Polytope& p,
                                                          const Polytope& q) {
  if (!p.is_full_dimensional() || !q.is_full_dimensional()) return std::nullopt;
  if (p.ambient_dim() != q.ambient_dim()) return std::nullopt;
  const std::size_t d = p.ambient_dim();
  if (d == 0) {
    return AffineUnimodularMap{IntMatrix::identity(0), {}};
  }
  const auto& vp = p.vertices();
  const auto& vq = q.vertices();
  if (vp.size() != vq.size()) return std::nullopt;
  if (p.facets().size() != q.facets().size()) return std::nullopt;

  PointSet lp_pts = enumerate_points(p, 1);
  PointSet lq_pts = enumerate_points(q, 1);
  if (lp_pts.size() != lq_pts.size()) return std::nullopt;
  if (count_points(p, 2) != count_points(q, 2)) return std::nullopt;

  VertexCombinatorics cp = combinatorics(p);
  VertexCombinatorics cq = combinatorics(q);
  {
    auto sp = cp.signature, sq = cq.signature;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }

  // Affinely independent vertex basis of p, chosen greedily.
  std::vector<std::size_t> basis;
  {
    std::vector<LatticePoint> chosen;
    for (std::size_t i = 0; i < vp.size() && basis.size() < d + 1; ++i) {
      chosen.push_back(vp[i]);
      if (affine_dimension(chosen) == chosen.size() - 1)
        basis.push_back(i);
      else
        chosen.pop_back();
    }
  }

  std::vector<std::size_t> image(d + 1);
  std::vector<bool> used(vq.size(), false);

  auto solve_and_check = [&]() -> std::optional<AffineUnimodularMap> {
    RatMatrix x(d, RatVector(d)), yb(d, RatVector(d));
    for (std::size_t col = 0; col < d; ++col)
      for (std::size_t row = 0; row < d; ++row) {
        x[row][col] = Rat(vp[basis[col + 1]][row] - vp[basis[0]][row]);
        yb[row][col] = Rat(vq[image[col + 1]][row] - vq[image[0]][row]);
      }
    // Solve U X = Y column-by-column via X^T U^T = Y^T.
    RatMatrix xt(d, RatVector(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) xt[i][j] = x[j][i];
    AffineUnimodularMap m;
    m.u = IntMatrix(d, d);
    for (std::size_t row = 0; row < d; ++row) {
      RatVector rhs(d);
      for (std::size_t k = 0; k < d; ++k) rhs[k] = yb[row][k];
      auto sol = rat_solve(xt, rhs);
      if (!sol) return std::nullopt;
      for (std::size_t j = 0; j < d; ++j) {
        if ((*sol)[j].get_den() != 1) return std::nullopt;
        m.u.at(row, j) = (*sol)[j].get_num();
      }
    }
    Int det = det_bareiss(m.u);
    if (det != 1 && det != -1) return std::nullopt;
    m.t.assign(d, Int(0));
    LatticePoint u_v0 = ehrhart::apply(AffineUnimodularMap{m.u, m.t}, vp[basis[0]]);
    for (std::size_t i = 0; i < d; ++i) m.t[i] = vq[image[0]][i] - u_v0[i];
    // The map must carry the lattice points of p exactly onto those of q.
    std::set<LatticePoint> target(lq_pts.points().begin(), lq_pts.points().end());
    for (const auto& pt : lp_pts.points()) {
      if (!target.erase(ehrhart::apply(m, pt))) return std::nullopt;
    }
    if (!target.empty()) return std::nullopt;
    return m;
  };

  std::optional<AffineUnimodularMap> result;
  auto backtrack = [&](auto&& self, std::size_t k) -> bool {
    if (k == d + 1) {
      result = solve_and_check();
      return result.has_value();
    }
    std::size_t bi = basis[k];
    for (std::size_t cand = 0; cand < vq.size(); ++cand) {
      if (used[cand]) continue;
      if (cp.signature[bi] != cq.signature[cand]) continue;
      bool ok = true;
      for (std::size_t l = 0; l < k && ok; ++l) {
        std::size_t bl = basis[l];
        if (cp.adjacent[bi][bl] != cq.adjacent[image[l]][cand]) ok = false;
        if (cp.common[bi][bl] != cq.common[image[l]][cand]) ok = false;
      }
      if (!ok) continue;
      // Image prefix must stay affinely independent.
      {
        std::vector<LatticePoint> pts;
        for (std::size_t l = 0; l < k; ++l) pts.push_back(vq[image[l]]);
        pts.push_back(vq[cand]);
        if (affine_dimension(pts) != k) continue;
      }
      image[k] = cand;
      used[cand] = true;
      if (self(self, k + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  backtrack(backtrack, 0);
  return result;
}

}  // namespace ehrhart
