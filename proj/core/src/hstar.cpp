#include "ehrhart/hstar.hpp"

#include <stdexcept>

namespace ehrhart {

Rat EhrhartPolynomial::evaluate(const Rat& t) const {
  Rat v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
  return v;
}

Int binomial(const Int& n, unsigned long k) {
  if (n >= 0 && Int(k) > n) return 0;
  Int num = 1;
  Int den = 1;
  for (unsigned long j = 0; j < k; ++j) {
    num *= n - static_cast<long>(j);
    den *= static_cast<long>(j) + 1;
  }
  return num / den;  // exact for integer n
}

HStarVector hstar_from_counts(const std::vector<Int>& counts, std::size_t d) {
  if (counts.size() != d + 1)
    throw std::invalid_argument("need counts E(0)..E(d)");
  if (counts[0] != 1) throw std::invalid_argument("E(0) must be 1");
  HStarVector h;
  h.d = d;
  h.coeffs.resize(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    Int v = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      Int term = binomial(Int(d + 1), j) * counts[i - j];
      if (j % 2 == 0)
        v += term;
      else
        v -= term;
    }
    if (v < 0)
      throw std::runtime_error(
          "negative h* entry: input counts are not lattice point counts of a "
          "lattice polytope (Stanley nonnegativity violated)");
    h.coeffs[i] = v;
  }
  return h;
}

EhrhartPolynomial ehrhart_from_hstar(const HStarVector& h) {
  const std::size_t d = h.d;
  EhrhartPolynomial e;
  e.degree = d;
  e.coeffs.assign(d + 1, Rat(0));
  // C(t + d - i, d) = prod_{j=1..d} (t + d - i - j + 1) / d!
  Int dfact = 1;
  for (std::size_t j = 2; j <= d; ++j) dfact *= static_cast<long>(j);
  for (std::size_t i = 0; i <= d; ++i) {
    if (h.coeffs[i] == 0) continue;
    // Expand prod_{j=1..d} (t + (d - i - j + 1)).
    std::vector<Int> poly{1};  // coefficients, low to high
    for (std::size_t j = 1; j <= d; ++j) {
      Int shift = Int(d) - Int(i) - Int(j) + 1;
      std::vector<Int> next(poly.size() + 1, Int(0));
      for (std::size_t t = 0; t < poly.size(); ++t) {
        next[t + 1] += poly[t];
        next[t] += poly[t] * shift;
      }
      poly = std::move(next);
    }
    for (std::size_t t = 0; t <= d; ++t)
      e.coeffs[t] += Rat(h.coeffs[i] * poly[t], dfact);
  }
  for (auto& c : e.coeffs) c.canonicalize();
  return e;
}

bool is_unimodal(const IntVector& v) {
  std::size_t i = 1;
  while (i < v.size() && v[i - 1] <= v[i]) ++i;
  while (i < v.size() && v[i - 1] >= v[i]) ++i;
  return i == v.size();
}

bool is_log_concave(const IntVector& v) {
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i - 1] * v[i + 1] > v[i] * v[i]) return false;
  return true;
}

bool has_internal_zeros(const IntVector& v) {
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] != 0) continue;
    bool left = false, right = false;
    for (std::size_t j = 0; j < i; ++j) left |= v[j] != 0;
    for (std::size_t j = i + 1; j < v.size(); ++j) right |= v[j] != 0;
    if (left && right) return true;
  }
  return false;
}

Int normalized_volume(const HStarVector& h) {
  Int s = 0;
  for (const Int& c : h.coeffs) s += c;
  return s;
}

}  // namespace ehrhart
