#pragma once

#include <vector>

#include "ehrhart/int_matrix.hpp"

namespace ehrhart {

/// Coefficient vector of the Ehrhart series numerator; length d+1.
struct HStarVector {
  std::size_t d = 0;
  IntVector coeffs;  // h*_0 .. h*_d

  bool operator==(const HStarVector&) const = default;
};

/// Exact rational coefficients c_0..c_d of E(t) in the monomial basis.
struct EhrhartPolynomial {
  std::size_t degree = 0;
  RatVector coeffs;

  Rat evaluate(const Rat& t) const;
};

Int binomial(const Int& n, unsigned long k);

/// h*_i = sum_{j=0..i} (-1)^j C(d+1, j) E(i-j): the series numerator
/// obtained by multiplying sum E(k) t^k with (1-t)^{d+1}.
/// counts must start with E(0) = 1 and have length d+1. A negative
/// resulting entry means the input counts were not Ehrhart counts of a
/// lattice polytope; this throws.
HStarVector hstar_from_counts(const std::vector<Int>& counts, std::size_t d);

/// E(t) = sum_i h*_i C(t + d - i, d), expanded to monomial coefficients.
EhrhartPolynomial ehrhart_from_hstar(const HStarVector& h);

bool is_unimodal(const IntVector& v);

/// v_{i-1} v_{i+1} <= v_i^2 at every interior index, checked literally
/// (no positivity hypothesis; internal zeros are handled by the separate
/// predicate below).
bool is_log_concave(const IntVector& v);

bool has_internal_zeros(const IntVector& v);

/// Sum of the h* entries = d! vol(P).
Int normalized_volume(const HStarVector& h);

}  // namespace ehrhart
