// ehrhart: command-line surface over the ehrhart_core library.
//
// Exit codes: 0 success, 1 verification failure, 2 polytope is not IDP,
// 3 undecided (resource budget exceeded), 64 malformed input.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ehrhart/datasets.hpp"
#include "ehrhart/digraph.hpp"
#include "ehrhart/hstar.hpp"
#include "ehrhart/idp.hpp"
#include "ehrhart/json_io.hpp"
#include "ehrhart/lattice_enum.hpp"
#include "ehrhart/search.hpp"
#include "ehrhart/triangulation.hpp"
#include "json.hpp"

namespace {

using ehrhart::Int;
using ehrhart::Polytope;
using ehrhart::Rat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitNotIdp = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitBadInput = 64;

int default_threads() {
  if (const char* env = std::getenv("EHRHART_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") return ehrhart::read_stream(std::cin);
  return ehrhart::read_file(path);
}

Polytope load_polytope(const std::string& path) {
  return ehrhart::polytope_from_json(read_input(path));
}

json int_vector_json(const ehrhart::IntVector& v) {
  json a = json::array();
  for (const Int& x : v) {
    if (x.fits_slong_p())
      a.push_back(static_cast<std::int64_t>(x.get_si()));
    else
      a.push_back(x.get_str());
  }
  return a;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

ehrhart::HStarVector hstar_by_counting(const Polytope& p, int threads) {
  const std::size_t d = p.ambient_dim();
  std::vector<Int> counts(d + 1);
  counts[0] = 1;
  ehrhart::EnumOptions opts;
  opts.threads = threads;
  for (std::size_t k = 1; k <= d; ++k)
    counts[k] = ehrhart::count_points(p, static_cast<long>(k), opts);
  return ehrhart::hstar_from_counts(counts, d);
}

Polytope normalized(const Polytope& p) {
  if (p.is_full_dimensional()) return p;
  return ehrhart::lattice_normalize(p).polytope;
}

int cmd_hstar(const std::string& input, int threads) {
  Polytope p = normalized(load_polytope(input));
  Timer timer;
  auto h = hstar_by_counting(p, threads);
  auto e = ehrhart::ehrhart_from_hstar(h);
  json out;
  out["dim"] = h.d;
  out["hstar"] = int_vector_json(h.coeffs);
  out["ehrhart_coeffs"] = json::array();
  for (const Rat& c : e.coeffs) out["ehrhart_coeffs"].push_back(rat_str(c));
  out["unimodal"] = ehrhart::is_unimodal(h.coeffs);
  out["log_concave"] = ehrhart::is_log_concave(h.coeffs);
  out["internal_zeros"] = ehrhart::has_internal_zeros(h.coeffs);
  out["volume_normalized"] = ehrhart::normalized_volume(h).get_str();
  out["timing"] = {{"seconds", timer.seconds()}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_idp(const std::string& input, int threads, std::optional<long> k_max) {
  Polytope p = normalized(load_polytope(input));
  Timer timer;
  ehrhart::IdpOptions opts;
  opts.threads = threads;
  opts.k_max = k_max;
  auto verdict = ehrhart::is_idp(p, opts);
  json out;
  out["idp"] = verdict.holds;
  out["undecided"] = verdict.undecided;
  out["checked_k"] = verdict.checked_k;
  if (verdict.failure_witness) {
    out["witness_k"] = verdict.failure_witness->first;
    out["witness_point"] = int_vector_json(verdict.failure_witness->second);
  }
  out["timing"] = {{"seconds", timer.seconds()}};
  std::cout << out.dump(2) << "\n";
  if (verdict.undecided) return kExitUndecided;
  return verdict.holds ? kExitOk : kExitNotIdp;
}

int cmd_points(const std::string& input, long k, int threads) {
  Polytope p = normalized(load_polytope(input));
  Timer timer;
  ehrhart::EnumOptions opts;
  opts.threads = threads;
  auto pts = ehrhart::enumerate_points(p, k, opts);
  json out;
  out["k"] = k;
  out["count"] = pts.size();
  out["points"] = json::array();
  for (const auto& pt : pts.points()) out["points"].push_back(int_vector_json(pt));
  out["timing"] = {{"seconds", timer.seconds()}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_count(const std::string& input, long k, int threads) {
  Polytope p = normalized(load_polytope(input));
  Timer timer;
  ehrhart::EnumOptions opts;
  opts.threads = threads;
  Int n = ehrhart::count_points(p, k, opts);
  json out;
  out["k"] = k;
  out["count"] = n.get_str();
  out["timing"] = {{"seconds", timer.seconds()}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_arc_polytope(const std::string& input) {
  ehrhart::Digraph g = ehrhart::digraph_from_json(read_input(input));
  std::cout << ehrhart::polytope_to_json(ehrhart::arc_polytope(g)) << "\n";
  return kExitOk;
}

int cmd_triangulations(const std::string& input, long budget_seconds) {
  Polytope p = normalized(load_polytope(input));
  Timer timer;
  auto verdict = ehrhart::exists_quadratic_triangulation(
      p, std::chrono::seconds(budget_seconds));
  if (verdict.status == ehrhart::QuadraticVerdict::Status::kUndecided) {
    std::cerr << "undecided: enumeration budget exceeded or configuration too "
                 "large (> dim+3 points)\n";
    return kExitUndecided;
  }
  json out;
  out["count"] = verdict.table.size();
  out["quadratic_exists"] =
      verdict.status == ehrhart::QuadraticVerdict::Status::kYes;
  out["triangulations"] = json::array();
  for (const auto& props : verdict.table) {
    json t;
    t["simplices"] = json::array();
    for (const auto& s : props.t.simplices) t["simplices"].push_back(s);
    t["regular"] = props.regular;
    t["unimodular"] = props.unimodular;
    t["flag"] = props.flag;
    out["triangulations"].push_back(std::move(t));
  }
  out["timing"] = {{"seconds", timer.seconds()}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_equiv(const std::string& input_p, const std::string& input_q) {
  Polytope p = normalized(load_polytope(input_p));
  Polytope q = normalized(load_polytope(input_q));
  Timer timer;
  auto map = ehrhart::unimodular_equivalence(p, q);
  json out;
  out["equivalent"] = map.has_value();
  if (map) {
    json u = json::array();
    for (std::size_t i = 0; i < map->u.rows(); ++i)
      u.push_back(int_vector_json(map->u.row(i)));
    out["map"] = {{"u", std::move(u)}, {"t", int_vector_json(map->t)}};
  }
  out["timing"] = {{"seconds", timer.seconds()}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_search(const ehrhart::SearchConfig& cfg) {
  auto result = ehrhart::local_search(cfg);
  json out;
  out["candidates"] = json::array();
  for (const auto& c : result.candidates) {
    json j;
    j["step"] = c.step;
    j["score"] = rat_str(c.score);
    j["hstar"] = int_vector_json(c.hstar.coeffs);
    j["idp"] = c.idp == ehrhart::IdpStatus::kVerified ? "verified"
               : c.idp == ehrhart::IdpStatus::kPassedNecessary
                   ? "passed-necessary"
                   : "unknown";
    json pts = json::array();
    for (const auto& v : c.polytope.vertices()) pts.push_back(int_vector_json(v));
    j["points"] = std::move(pts);
    out["candidates"].push_back(std::move(j));
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

struct Check {
  std::string name;
  bool pass;
  double seconds;
};

void print_report(const std::string& target, const std::vector<Check>& checks) {
  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << target << ": " << c.name
              << "  (" << c.seconds << "s)\n";
    all = all && c.pass;
  }
  std::cout << (all ? "OK" : "FAILED") << "  " << target << "\n";
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int cmd_verify(const std::string& target, int threads, long budget_seconds) {
  std::vector<Check> checks;
  auto run = [&](const std::string& name, auto&& fn) {
    Timer t;
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::cerr << name << ": " << e.what() << "\n";
    }
    checks.push_back({name, ok, t.seconds()});
  };

  if (target == "theorem1") {
    Polytope p = ehrhart::theorem1_polytope();
    ehrhart::HStarVector h;
    run("dimension = 7", [&] { return p.dim() == 7 && p.is_full_dimensional(); });
    run("9 vertices", [&] { return p.vertices().size() == 9; });
    run("h* = (1,2,3,4,5,3,2,1), unimodal, not log-concave (both methods)",
        [&] {
          h = hstar_by_counting(p, threads);
          ehrhart::IntVector want{1, 2, 3, 4, 5, 3, 2, 1};
          return h.coeffs == want && h == ehrhart::hstar_halfopen(p) &&
                 ehrhart::is_unimodal(h.coeffs) &&
                 !ehrhart::is_log_concave(h.coeffs);
        });
    run("all 8 Ehrhart coefficients positive", [&] {
      auto e = ehrhart::ehrhart_from_hstar(h);
      for (const Rat& c : e.coeffs)
        if (c <= 0) return false;
      return e.coeffs.size() == 8;
    });
    run("IDP for k = 1..5", [&] {
      ehrhart::IdpOptions opts;
      opts.threads = threads;
      auto v = ehrhart::is_idp(p, opts);
      return v.holds && v.checked_k.size() == 5;
    });
    print_report(target, checks);
    return all_pass(checks) ? kExitOk : kExitVerifyFail;
  }

  if (target == "theorem2") {
    Polytope p = ehrhart::theorem2_polytope();
    ehrhart::HStarVector h;
    run("dimension = 12",
        [&] { return p.dim() == 12 && p.is_full_dimensional(); });
    run("15 vertices and exactly 15 lattice points", [&] {
      return p.vertices().size() == 15 &&
             ehrhart::count_points(p, 1) == 15;
    });
    run("h* = (1,2,3,4,5,3,2,1,0,0,0,0,0), not log-concave (both methods)",
        [&] {
          h = hstar_by_counting(p, threads);
          ehrhart::IntVector want{1, 2, 3, 4, 5, 3, 2, 1, 0, 0, 0, 0, 0};
          return h.coeffs == want && h == ehrhart::hstar_halfopen(p) &&
                 !ehrhart::is_log_concave(h.coeffs);
        });
    run("all 13 Ehrhart coefficients positive", [&] {
      auto e = ehrhart::ehrhart_from_hstar(h);
      for (const Rat& c : e.coeffs)
        if (c <= 0) return false;
      return e.coeffs.size() == 13;
    });
    run("IDP for k = 1..10", [&] {
      ehrhart::IdpOptions opts;
      opts.threads = threads;
      auto v = ehrhart::is_idp(p, opts);
      return v.holds && v.checked_k.size() == 10;
    });
    run("every spanning 13-subset has determinant in {0, +-1}", [&] {
      return ehrhart::all_spanning_simplices_unimodular(p).all_unimodular;
    });
    bool undecided = false;
    run("no quadratic (regular, unimodular, flag) triangulation", [&] {
      auto verdict = ehrhart::exists_quadratic_triangulation(
          p, std::chrono::seconds(budget_seconds));
      if (verdict.status == ehrhart::QuadraticVerdict::Status::kUndecided) {
        undecided = true;
        return false;
      }
      for (const auto& props : verdict.table)
        if (!props.unimodular) return false;
      return verdict.status == ehrhart::QuadraticVerdict::Status::kNo;
    });
    print_report(target, checks);
    if (undecided) return kExitUndecided;
    return all_pass(checks) ? kExitOk : kExitVerifyFail;
  }

  if (target == "proposition") {
    run("arc polytope of Figure 1 is equivalent to the theorem2 polytope",
        [&] {
          Polytope arc = ehrhart::arc_polytope(ehrhart::figure1_graph());
          auto norm = ehrhart::lattice_normalize(arc);
          if (norm.polytope.dim() != 12 ||
              norm.polytope.vertices().size() != 15)
            return false;
          return ehrhart::unimodular_equivalence(norm.polytope,
                                                 ehrhart::theorem2_polytope())
              .has_value();
        });
    print_report(target, checks);
    return all_pass(checks) ? kExitOk : kExitVerifyFail;
  }

  std::cerr << "unknown verify target: " << target
            << " (expected theorem1 | theorem2 | proposition)\n";
  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ehrhart-theoretic computations on lattice polytopes"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "Worker threads (default EHRHART_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  std::string verify_target;
  long verify_budget = 3600;
  auto* verify = app.add_subcommand("verify", "Run a bundled claim checklist");
  verify->add_option("target", verify_target, "theorem1 | theorem2 | proposition")
      ->required();
  verify->add_option("--budget-seconds", verify_budget,
                     "Time budget for triangulation enumeration");

  std::string in_path = "-";
  auto* hstar = app.add_subcommand("hstar", "h*-vector and Ehrhart data");
  hstar->add_option("input", in_path, "Polytope JSON file, or - for stdin");

  std::string idp_in = "-";
  long idp_kmax = -1;
  auto* idp = app.add_subcommand("idp", "Integer decomposition property");
  idp->add_option("input", idp_in, "Polytope JSON file, or - for stdin");
  idp->add_option("--k-max", idp_kmax, "Highest level k to check (default d-2)");

  std::string pts_in = "-";
  long pts_k = 1;
  auto* points = app.add_subcommand("points", "Lattice points of a dilate");
  points->add_option("input", pts_in, "Polytope JSON file, or - for stdin");
  points->add_option("-k,--dilation", pts_k, "Dilation factor")
      ->check(CLI::PositiveNumber);

  std::string cnt_in = "-";
  long cnt_k = 1;
  auto* count = app.add_subcommand("count", "Lattice point count of a dilate");
  count->add_option("input", cnt_in, "Polytope JSON file, or - for stdin");
  count->add_option("-k,--dilation", cnt_k, "Dilation factor")
      ->check(CLI::PositiveNumber);

  std::string arc_in = "-";
  auto* arc = app.add_subcommand("arc-polytope", "Arc polytope of a digraph");
  arc->add_option("input", arc_in, "Digraph JSON file, or - for stdin");

  std::string tri_in = "-";
  long tri_budget = 3600;
  auto* tri = app.add_subcommand(
      "triangulations", "Enumerate triangulations and their properties");
  tri->add_option("input", tri_in, "Polytope JSON file, or - for stdin");
  tri->add_option("--budget-seconds", tri_budget, "Enumeration time budget");

  std::string eq_p, eq_q;
  auto* equiv = app.add_subcommand("equiv", "Unimodular equivalence test");
  equiv->add_option("p", eq_p, "First polytope JSON file")->required();
  equiv->add_option("q", eq_q, "Second polytope JSON file")->required();

  ehrhart::SearchConfig cfg;
  bool have_seed = false;
  std::string search_start, search_out;
  std::string idp_level = "necessary";
  auto* search = app.add_subcommand("search", "Local search for h* log-concavity violations");
  search->add_option("--dim", cfg.dim, "Ambient dimension")->check(CLI::PositiveNumber);
  search->add_option("--seed", cfg.seed, "RNG seed (required)")
      ->required()
      ->each([&](const std::string&) { have_seed = true; });
  search->add_option("--steps", cfg.steps, "Annealing steps");
  search->add_option("--vertex-budget", cfg.vertex_budget, "Max vertex count");
  search->add_option("--coord-range", cfg.coord_range, "Mutation window half-width");
  search->add_option("--idp-level", idp_level, "off | necessary | full");
  search->add_option("--start", search_start, "Start polytope JSON file");
  search->add_option("--out", search_out, "Results directory (candidates/runlog .jsonl)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(verify_target, threads, verify_budget);
    if (*hstar) return cmd_hstar(in_path, threads);
    if (*idp)
      return cmd_idp(idp_in, threads,
                     idp_kmax >= 1 ? std::optional<long>(idp_kmax) : std::nullopt);
    if (*points) return cmd_points(pts_in, pts_k, threads);
    if (*count) return cmd_count(cnt_in, cnt_k, threads);
    if (*arc) return cmd_arc_polytope(arc_in);
    if (*tri) return cmd_triangulations(tri_in, tri_budget);
    if (*equiv) return cmd_equiv(eq_p, eq_q);
    if (*search) {
      (void)have_seed;
      if (idp_level == "off")
        cfg.idp_level = ehrhart::IdpLevel::kOff;
      else if (idp_level == "necessary")
        cfg.idp_level = ehrhart::IdpLevel::kNecessary;
      else if (idp_level == "full")
        cfg.idp_level = ehrhart::IdpLevel::kFull;
      else {
        std::cerr << "invalid --idp-level: " << idp_level << "\n";
        return kExitBadInput;
      }
      if (!search_start.empty())
        cfg.start = normalized(load_polytope(search_start));
      if (!search_out.empty()) cfg.out_dir = search_out;
      if (cfg.start) {
        cfg.dim = cfg.start->ambient_dim();
        if (cfg.vertex_budget <= cfg.dim)
          cfg.vertex_budget = cfg.start->vertices().size() + 2;
      }
      return cmd_search(cfg);
    }
  } catch (const ehrhart::FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return kExitOk;
}
