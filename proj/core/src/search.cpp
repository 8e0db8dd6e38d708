#include "ehrhart/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "ehrhart/idp.hpp"
#include "ehrhart/lattice_enum.hpp"
#include "json.hpp"

namespace ehrhart {

namespace {

using nlohmann::json;

json polytope_points_json(const Polytope& p) {
  json pts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const Int& x : v) row.push_back(static_cast<std::int64_t>(x.get_si()));
    pts.push_back(std::move(row));
  }
  return pts;
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

HStarVector hstar_by_counting(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<Int> counts(d + 1);
  counts[0] = 1;
  for (std::size_t k = 1; k <= d; ++k)
    counts[k] = count_points(p, static_cast<long>(k));
  return hstar_from_counts(counts, d);
}

}  // namespace

Rat lc_violation_score(const HStarVector& h) {
  Rat best;
  bool have = false;
  for (std::size_t i = 1; i + 1 < h.coeffs.size(); ++i) {
    Int raw = h.coeffs[i - 1] * h.coeffs[i + 1] - h.coeffs[i] * h.coeffs[i];
    Int denom = h.coeffs[i] * h.coeffs[i];
    if (denom < 1) denom = 1;
    Rat s(raw, denom);
    s.canonicalize();
    if (!have || s > best) {
      best = s;
      have = true;
    }
  }
  if (!have) return Rat(0);
  return best;
}

MutationResult mutate(const Polytope& p, std::mt19937_64& rng, long coord_range) {
  const std::size_t d = p.ambient_dim();
  const auto& verts = p.vertices();
  std::uniform_int_distribution<int> move_dist(0, 2);
  std::uniform_int_distribution<long> coord_dist(-coord_range, coord_range);
  std::uniform_int_distribution<long> short_dist(-1, 1);

  for (int attempt = 0; attempt < 40; ++attempt) {
    int move = move_dist(rng);
    std::vector<LatticePoint> pts = verts;
    std::string name;
    if (move == 0) {
      LatticePoint q(d);
      for (std::size_t i = 0; i < d; ++i) q[i] = Int(coord_dist(rng));
      pts.push_back(q);
      name = "add";
    } else if (move == 1) {
      if (verts.size() <= d + 1) continue;  // removal would drop dimension
      std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
      pts.erase(pts.begin() + pick(rng));
      name = "remove";
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
      std::size_t idx = pick(rng);
      LatticePoint q = pts[idx];
      bool moved = false;
      for (std::size_t i = 0; i < d; ++i) {
        long s = short_dist(rng);
        if (s != 0) moved = true;
        q[i] += s;
      }
      if (!moved) continue;
      pts[idx] = std::move(q);
      name = "translate";
    }
    Polytope cand(d, std::move(pts));
    if (cand.dim() != p.dim()) continue;
    if (cand.vertices() == verts) continue;  // no-op move (e.g. point inside)
    return {std::move(cand), true, name};
  }
  return {p, false, "none"};
}

SearchResult local_search(const SearchConfig& cfg) {
  if (cfg.dim == 0 || cfg.steps > 1000000 || cfg.vertex_budget <= cfg.dim)
    throw std::invalid_argument("invalid search configuration");
  std::mt19937_64 rng(cfg.seed);
  SearchResult result;

  Polytope current = [&] {
    if (cfg.start) return *cfg.start;
    std::uniform_int_distribution<long> coord_dist(-cfg.coord_range,
                                                   cfg.coord_range);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::vector<LatticePoint> pts;
      for (std::size_t i = 0; i < cfg.vertex_budget; ++i) {
        LatticePoint q(cfg.dim);
        for (std::size_t j = 0; j < cfg.dim; ++j) q[j] = Int(coord_dist(rng));
        pts.push_back(std::move(q));
      }
      Polytope p(cfg.dim, std::move(pts));
      if (p.dim() == cfg.dim) return p;
    }
    throw std::runtime_error("could not sample a full-dimensional start");
  }();
  if (current.dim() != current.ambient_dim())
    throw std::invalid_argument("start polytope must be full-dimensional");

  auto evaluate = [&](const Polytope& p, std::size_t step) {
    Candidate c{p, hstar_by_counting(p), Rat(0), IdpStatus::kUnknown, cfg.seed,
                step};
    c.score = lc_violation_score(c.hstar);
    if (c.score > 0 && cfg.idp_level != IdpLevel::kOff) {
      if (idp_necessary_conditions(p)) {
        c.idp = IdpStatus::kPassedNecessary;
        if (cfg.idp_level == IdpLevel::kFull && is_idp(p).holds)
          c.idp = IdpStatus::kVerified;
      }
    }
    return c;
  };

  auto log_step = [&](std::size_t step, const std::string& move,
                      const Rat& score, bool accepted) {
    json j;
    j["step"] = step;
    j["move"] = move;
    j["score"] = rat_str(score);
    j["accepted"] = accepted;
    result.runlog.push_back(j.dump());
  };

  Candidate cur = evaluate(current, 0);
  log_step(0, "start", cur.score, true);
  result.candidates.push_back(cur);

  double temp = cfg.initial_temp;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t step = 1; step <= cfg.steps; ++step) {
    MutationResult m = mutate(cur.polytope, rng, cfg.coord_range);
    if (!m.changed) {
      log_step(step, m.move, cur.score, false);
      temp *= cfg.cooling;
      continue;
    }
    // Respect the vertex budget.
    if (m.polytope.vertices().size() > cfg.vertex_budget) {
      log_step(step, m.move, cur.score, false);
      temp *= cfg.cooling;
      continue;
    }
    Candidate next = evaluate(m.polytope, step);
    double delta = next.score.get_d() - cur.score.get_d();
    bool accept = delta >= 0 ||
                  (temp > 0 && unif(rng) < std::exp(delta / temp));
    log_step(step, m.move, next.score, accept);
    if (accept) {
      cur = std::move(next);
      if (cur.score > 0) result.candidates.push_back(cur);
    }
    temp *= cfg.cooling;
  }

  std::stable_sort(result.candidates.begin(), result.candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.score > b.score;
                   });

  if (cfg.out_dir) {
    std::filesystem::create_directories(*cfg.out_dir);
    std::ofstream cand(std::filesystem::path(*cfg.out_dir) / "candidates.jsonl");
    for (const auto& c : result.candidates) {
      json j;
      j["seed"] = c.seed;
      j["step"] = c.step;
      j["score"] = rat_str(c.score);
      j["hstar"] = json::array();
      for (const Int& x : c.hstar.coeffs)
        j["hstar"].push_back(static_cast<std::int64_t>(x.get_si()));
      j["idp"] = c.idp == IdpStatus::kVerified      ? "verified"
                 : c.idp == IdpStatus::kPassedNecessary ? "passed-necessary"
                                                         : "unknown";
      j["points"] = polytope_points_json(c.polytope);
      cand << j.dump() << "\n";
    }
    std::ofstream log(std::filesystem::path(*cfg.out_dir) / "runlog.jsonl");
    for (const auto& line : result.runlog) log << line << "\n";
  }
  return result;
}

}  // namespace ehrhart
