#include "ehrhart/linalg.hpp"

#include <stdexcept>

namespace ehrhart {

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t nrows = m.size(), ncols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rat_rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return rref(copy).size();
}

std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  if (a.empty()) return RatVector{};
  const std::size_t n = a.front().size();
  RatMatrix aug = a;
  for (std::size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RatVector x(n, Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    // Row k has leading 1 in column pivots[k]; free columns set to 0.
    Rat v = aug[k][n];
    for (std::size_t j = pivots[k] + 1; j < n; ++j) v -= aug[k][j] * x[j];
    x[pivots[k]] = v;
  }
  return x;
}

std::vector<RatVector> rat_kernel(const RatMatrix& a) {
  if (a.empty()) return {};
  const std::size_t n = a.front().size();
  RatMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n, Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = Rat(m.at(i, j));
  return r;
}

IntVector primitive(const RatVector& v) {
  Int lcm = 1;
  for (const Rat& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(lcm);
    out[i] = scaled.get_num();
  }
  make_primitive(out);
  return out;
}

void make_primitive(IntVector& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (Int& x : v) x /= g;
}

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace ehrhart
