#include "ehrhart/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ehrhart {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw FormatError("invalid JSON");
  return j;
}

Int int_from_json(const json& v) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw FormatError("not an integer: " + v.dump());
    }
  }
  throw FormatError("expected an integer, got " + v.dump());
}

}  // namespace

Polytope polytope_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("points"))
    throw FormatError("polytope JSON needs \"ambient_dim\" and \"points\"");
  if (!j["ambient_dim"].is_number_unsigned())
    throw FormatError("\"ambient_dim\" must be a nonnegative integer");
  std::size_t n = j["ambient_dim"].get<std::size_t>();
  if (!j["points"].is_array() || j["points"].empty())
    throw FormatError("\"points\" must be a nonempty array");
  std::vector<LatticePoint> pts;
  for (const auto& row : j["points"]) {
    if (!row.is_array() || row.size() != n)
      throw FormatError("every point must have ambient_dim coordinates");
    LatticePoint p;
    p.reserve(n);
    for (const auto& v : row) p.push_back(int_from_json(v));
    pts.push_back(std::move(p));
  }
  return Polytope(n, std::move(pts));
}

std::string polytope_to_json(const Polytope& p) {
  json pts = json::array();
  for (const auto& pt : p.generators()) {
    json row = json::array();
    for (const Int& x : pt) {
      if (x.fits_slong_p())
        row.push_back(static_cast<std::int64_t>(x.get_si()));
      else
        row.push_back(x.get_str());
    }
    pts.push_back(std::move(row));
  }
  json j;
  j["ambient_dim"] = p.ambient_dim();
  j["points"] = std::move(pts);
  return j.dump(2);
}

Digraph digraph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    throw FormatError("digraph JSON needs \"n\" and \"arcs\"");
  if (!j["n"].is_number_unsigned())
    throw FormatError("\"n\" must be a nonnegative integer");
  std::size_t n = j["n"].get<std::size_t>();
  if (!j["arcs"].is_array()) throw FormatError("\"arcs\" must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_unsigned() ||
        !a[1].is_number_unsigned())
      throw FormatError("every arc must be a pair of positive integers");
    arcs.push_back({a[0].get<std::size_t>(), a[1].get<std::size_t>()});
  }
  try {
    return Digraph(n, std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string digraph_to_json(const Digraph& g) {
  json arcs = json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back(json::array({u, v}));
  json j;
  j["n"] = g.num_vertices();
  j["arcs"] = std::move(arcs);
  return j.dump(2);
}

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open file: " + path);
  return read_stream(f);
}

}  // namespace ehrhart
