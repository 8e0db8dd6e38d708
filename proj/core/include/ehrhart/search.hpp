#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ehrhart/hstar.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

enum class IdpLevel { kOff, kNecessary, kFull };

struct SearchConfig {
  std::size_t dim = 2;
  std::size_t vertex_budget = 6;   // target d + k vertices, k small
  long coord_range = 2;            // mutation window [-range, range]^d
  std::size_t steps = 100;
  std::uint64_t seed = 0;          // mandatory for reproducibility
  double initial_temp = 0.5;
  double cooling = 0.995;
  double w_add = 1.0, w_remove = 1.0, w_translate = 1.0;
  IdpLevel idp_level = IdpLevel::kNecessary;
  std::optional<Polytope> start;   // default: random spanning start
  std::optional<std::string> out_dir;  // write candidates/runlog .jsonl here
};

enum class IdpStatus { kUnknown, kPassedNecessary, kVerified };

struct Candidate {
  Polytope polytope;
  HStarVector hstar;
  Rat score;
  IdpStatus idp = IdpStatus::kUnknown;
  std::uint64_t seed = 0;
  std::size_t step = 0;
};

/// max over interior i of (h*_{i-1} h*_{i+1} - h*_i^2) / max(1, h*_i^2);
/// positive iff h is not log-concave.
Rat lc_violation_score(const HStarVector& h);

struct MutationResult {
  Polytope polytope;
  bool changed = false;
  std::string move;  // "add" / "remove" / "translate" / "none"
};

/// One local move: add a lattice point from the window, remove a vertex,
/// or translate a vertex by a short lattice vector. Moves that collapse
/// dimension or leave the vertex set unchanged are rejected and retried;
/// an exhausted retry budget returns the input unchanged.
MutationResult mutate(const Polytope& p, std::mt19937_64& rng, long coord_range);

struct SearchResult {
  std::vector<Candidate> candidates;  // ranked by score, best first
  std::vector<std::string> runlog;    // one JSON object per line
};

/// Simulated annealing maximizing lc_violation_score; candidates with
/// positive score are escalated through the configured IDP checks.
/// Deterministic given (seed, config); timing never enters the logs.
SearchResult local_search(const SearchConfig& cfg);

}  // namespace ehrhart
