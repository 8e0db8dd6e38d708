#include "ehrhart/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace ehrhart {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("ragged row list");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  IntVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap(entries_[i * cols_ + k], entries_[j * cols_ + k]);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows()) throw std::invalid_argument("dimension mismatch");
  IntMatrix r(rows_, other.cols());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols(); ++j)
        r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

Int det_bareiss(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        // Bareiss: division is exact
        a.at(i, j) = v / prev;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// Row op helper used by hnf: r_i <- p*r_i + q*r_j, r_j <- a*r_i + b*r_j,
// applied to both m and u.
void rows_combine(IntMatrix& m, IntMatrix& u, std::size_t i, std::size_t j,
                  const Int& p, const Int& q, const Int& a, const Int& b) {
  for (IntMatrix* mat : {&m, &u}) {
    for (std::size_t k = 0; k < mat->cols(); ++k) {
      Int mi = mat->at(i, k), mj = mat->at(j, k);
      mat->at(i, k) = p * mi + q * mj;
      mat->at(j, k) = a * mi + b * mj;
    }
  }
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t nrows = m.rows(), ncols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
    // Clear below pivot_row in this column with extended-gcd row combos.
    for (std::size_t i = pivot_row + 1; i < nrows; ++i) {
      if (h.at(i, col) == 0) continue;
      if (h.at(pivot_row, col) == 0) {
        h.swap_rows(pivot_row, i);
        u.swap_rows(pivot_row, i);
        continue;
      }
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                 h.at(pivot_row, col).get_mpz_t(), h.at(i, col).get_mpz_t());
      Int a = -h.at(i, col) / g;
      Int b = h.at(pivot_row, col) / g;
      // det of [[p,q],[a,b]] = (p*hpc + q*hic)/g = 1
      rows_combine(h, u, pivot_row, i, p, q, a, b);
    }
    if (h.at(pivot_row, col) == 0) continue;  // no pivot in this column
    if (h.at(pivot_row, col) < 0) {
      for (std::size_t k = 0; k < ncols; ++k)
        h.at(pivot_row, k) = -h.at(pivot_row, k);
      for (std::size_t k = 0; k < nrows; ++k)
        u.at(pivot_row, k) = -u.at(pivot_row, k);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(),
                 h.at(pivot_row, col).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = 0; k < ncols; ++k)
        h.at(i, k) -= q * h.at(pivot_row, k);
      for (std::size_t k = 0; k < nrows; ++k)
        u.at(i, k) -= q * u.at(pivot_row, k);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

namespace {

void cols_combine(IntMatrix& m, IntMatrix& v, std::size_t i, std::size_t j,
                  const Int& p, const Int& q, const Int& a, const Int& b) {
  for (IntMatrix* mat : {&m, &v}) {
    for (std::size_t k = 0; k < mat->rows(); ++k) {
      Int mi = mat->at(k, i), mj = mat->at(k, j);
      mat->at(k, i) = p * mi + q * mj;
      mat->at(k, j) = a * mi + b * mj;
    }
  }
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    // Move a nonzero entry to (t, t).
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < s.rows() && !found; ++i)
      for (std::size_t j = t; j < s.cols() && !found; ++j)
        if (s.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    swap_cols(s, t, pj);
    swap_cols(v, t, pj);

    for (;;) {
      // Clear column t below the pivot. A plain elimination is used when
      // the pivot divides the entry (it leaves row t untouched); the gcd
      // combination strictly shrinks |s(t,t)|, so the outer loop ends.
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        if (s.at(i, t) % s.at(t, t) == 0) {
          Int f = s.at(i, t) / s.at(t, t);
          for (std::size_t k = 0; k < s.cols(); ++k)
            s.at(i, k) -= f * s.at(t, k);
          for (std::size_t k = 0; k < u.cols(); ++k)
            u.at(i, k) -= f * u.at(t, k);
          continue;
        }
        Int g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                   s.at(t, t).get_mpz_t(), s.at(i, t).get_mpz_t());
        Int a = -s.at(i, t) / g, b = s.at(t, t) / g;
        rows_combine(s, u, t, i, p, q, a, b);
      }
      // Clear row t right of the pivot.
      bool row_clear = true;
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        if (s.at(t, j) % s.at(t, t) == 0) {
          Int f = s.at(t, j) / s.at(t, t);
          for (std::size_t k = 0; k < s.rows(); ++k)
            s.at(k, j) -= f * s.at(k, t);
          for (std::size_t k = 0; k < v.rows(); ++k)
            v.at(k, j) -= f * v.at(k, t);
          continue;
        }
        Int g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                   s.at(t, t).get_mpz_t(), s.at(t, j).get_mpz_t());
        Int a = -s.at(t, j) / g, b = s.at(t, t) / g;
        cols_combine(s, v, t, j, p, q, a, b);
        row_clear = false;
      }
      // Column ops may have reintroduced entries in column t.
      bool col_clear = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i)
        if (s.at(i, t) != 0) col_clear = false;
      if (row_clear && col_clear) break;
    }

    // Enforce divisibility: s(t,t) must divide everything below-right.
    bool restart = false;
    for (std::size_t i = t + 1; i < s.rows() && !restart; ++i)
      for (std::size_t j = t + 1; j < s.cols() && !restart; ++j)
        if (s.at(i, j) % s.at(t, t) != 0) {
          // Fold row i into row t and redo this pivot.
          for (std::size_t k = 0; k < s.cols(); ++k)
            s.at(t, k) += s.at(i, k);
          for (std::size_t k = 0; k < u.cols(); ++k)
            u.at(t, k) += u.at(i, k);
          restart = true;
        }
    if (restart) {
      --t;
      continue;
    }
    if (s.at(t, t) < 0) {
      s.at(t, t) = -s.at(t, t);
      for (std::size_t k = 0; k < u.cols(); ++k) u.at(t, k) = -u.at(t, k);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::size_t rank(const IntMatrix& m) {
  HnfResult r = hnf(m);
  std::size_t rk = 0;
  for (std::size_t i = 0; i < r.h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < r.h.cols(); ++j)
      if (r.h.at(i, j) != 0) nonzero = true;
    if (nonzero) ++rk;
  }
  return rk;
}

}  // namespace ehrhart
