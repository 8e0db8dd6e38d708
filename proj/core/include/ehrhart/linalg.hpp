#pragma once

#include <optional>
#include <vector>

#include "ehrhart/int_matrix.hpp"

namespace ehrhart {

using RatMatrix = std::vector<RatVector>;

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rat_rank(const RatMatrix& m);

/// Solve A x = b over Q (A need not be square). Returns one solution
/// or nullopt if inconsistent.
std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b);

/// Basis of the right kernel of A over Q.
std::vector<RatVector> rat_kernel(const RatMatrix& a);

RatMatrix to_rat(const IntMatrix& m);

/// Scale a rational vector to a primitive integer vector (gcd 1),
/// preserving direction. Zero vector maps to zero.
IntVector primitive(const RatVector& v);
void make_primitive(IntVector& v);

Rat dot(const RatVector& a, const RatVector& b);
Int dot(const IntVector& a, const IntVector& b);

}  // namespace ehrhart
