#pragma once

#include <optional>
#include <vector>

#include "ehrhart/lattice_enum.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

struct IdpVerdict {
  bool holds = false;
  bool undecided = false;            // resource budget exhausted
  std::vector<long> checked_k;       // levels k with (k+1)P fully covered
  std::optional<std::pair<long, LatticePoint>> failure_witness;
};

struct IdpOptions {
  // Levels k = 1..k_max are verified. When unset, k_max = d - 2: for
  // k >= d - 1 every lattice point of (k+1)P splits off a point of P
  // (a standard fact in Ehrhart theory, e.g. Cox-Haase-Hibi-Higashitani,
  // "Integer decomposition property of dilated polytopes"; it is assumed
  // here, not re-proved).
  std::optional<long> k_max;
  int threads = 1;
};

/// Decide the integer decomposition property: every lattice point of
/// (k+1)P must be the sum of a lattice point of P and one of kP, for
/// k = 1..k_max. Membership of z - x in kP is probed directly against
/// the facet system, so the big level sets are streamed, never stored.
IdpVerdict is_idp(const Polytope& p, const IdpOptions& opts = {});

/// Cheap necessary conditions used by the search pipeline before the
/// full check: the lattice points of P affinely span, and P + P covers 2P.
bool idp_necessary_conditions(const Polytope& p);

}  // namespace ehrhart
