#ifndef LEDC_IO_HPP
#define LEDC_IO_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ledc/code.hpp"
#include "ledc/error.hpp"
#include "ledc/field.hpp"
#include "ledc/locality.hpp"
#include "ledc/matrix.hpp"

namespace ledc::io {

using nlohmann::json;

/// {"q": 13, "k": 7 (optional), "groups": [{"K": [1,2,3,4], "n": 5, "N": [...] (optional)}, ...]}
///
/// Without "N", positions are handed out as consecutive blocks in group order.
/// Either every group lists N or none does.
struct StructureFile {
  std::uint64_t q = 0;
  LocalityStructure structure;

  friend bool operator==(const StructureFile&, const StructureFile&) = default;
};

struct CodeFile {
  StructureFile structure;
  std::optional<std::string> method;  // nested | cyclic | random
  std::optional<std::uint32_t> omega;
  std::optional<std::uint64_t> seed;
  MatrixGF G;
  int claimed_distance = 0;

  PrimeField field() const { return G.field(); }
  LedcCode code() const { return LedcCode(structure.structure, G); }

  friend bool operator==(const CodeFile&, const CodeFile&) = default;
};

namespace detail {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

inline bool positions_are_consecutive(const LocalityStructure& s) {
  int next = 1;
  for (const auto& g : s.groups())
    for (int j : g.N)
      if (j != next++) return false;
  return true;
}

}  // namespace detail

inline StructureFile structure_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "structure must be a JSON object");
  const auto q = detail::get_field<std::uint64_t>(j, "q");
  make_field(q);
  const json groups = detail::get_field<json>(j, "groups");
  if (!groups.is_array() || groups.empty()) throw Error(ErrorKind::ParseError, "\"groups\" must be a nonempty array");

  std::vector<LocalGroup> parsed;
  int max_k = 0;
  int with_n = 0;
  int next = 1;
  for (const auto& g : groups) {
    if (!g.is_object()) throw Error(ErrorKind::ParseError, "group entries must be objects");
    LocalGroup lg;
    lg.K = detail::get_field<std::vector<int>>(g, "K");
    for (int i : lg.K) max_k = std::max(max_k, i);
    const bool has_N = g.contains("N");
    if (has_N) {
      lg.N = detail::get_field<std::vector<int>>(g, "N");
      ++with_n;
      if (g.contains("n") && detail::get_field<int>(g, "n") != static_cast<int>(lg.N.size()))
        throw Error(ErrorKind::ParseError, "\"n\" disagrees with |N|");
    } else {
      const int n_i = detail::get_field<int>(g, "n");
      if (n_i < 0) throw Error(ErrorKind::ParseError, "\"n\" must be nonnegative");
      for (int c = 0; c < n_i; ++c) lg.N.push_back(next++);
    }
    parsed.push_back(std::move(lg));
  }
  if (with_n != 0 && with_n != static_cast<int>(parsed.size()))
    throw Error(ErrorKind::ParseError, "either every group lists \"N\" or none does");
  const int k = j.contains("k") ? detail::get_field<int>(j, "k") : max_k;
  return StructureFile{q, validate(k, std::move(parsed))};
}

inline json structure_to_json(const StructureFile& sf) {
  json groups = json::array();
  const bool consecutive = detail::positions_are_consecutive(sf.structure);
  for (const auto& g : sf.structure.groups()) {
    json jg = {{"K", g.K}, {"n", g.N.size()}};
    if (!consecutive) jg["N"] = g.N;
    groups.push_back(std::move(jg));
  }
  return json{{"q", sf.q}, {"k", sf.structure.k()}, {"groups", std::move(groups)}};
}

inline CodeFile code_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "code file must be a JSON object");
  StructureFile sf = structure_from_json(detail::get_field<json>(j, "structure"));
  const PrimeField f = make_field(sf.q);
  const auto rows = detail::get_field<std::vector<std::vector<long long>>>(j, "G");
  const auto k = static_cast<std::size_t>(sf.structure.k()), n = static_cast<std::size_t>(sf.structure.n());
  if (rows.size() != k) throw Error(ErrorKind::ParseError, "G must have k = " + std::to_string(k) + " rows");
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::ParseError, "every row of G must have n = " + std::to_string(n) + " entries");
    for (long long v : row)
      if (v < 0 || v >= static_cast<long long>(sf.q))
        throw Error(ErrorKind::ParseError, "G entry " + std::to_string(v) + " outside [0, q)");
  }
  CodeFile out{sf, std::nullopt, std::nullopt, std::nullopt, MatrixGF::from_rows(f, rows, n),
               detail::get_field<int>(j, "claimed_distance")};
  if (j.contains("method")) {
    out.method = detail::get_field<std::string>(j, "method");
    if (*out.method != "nested" && *out.method != "cyclic" && *out.method != "random")
      throw Error(ErrorKind::ParseError, "unknown method \"" + *out.method + "\"");
  }
  if (j.contains("omega") && !j.at("omega").is_null()) out.omega = detail::get_field<std::uint32_t>(j, "omega");
  if (j.contains("seed") && !j.at("seed").is_null()) out.seed = detail::get_field<std::uint64_t>(j, "seed");
  return out;
}

inline json code_to_json(const CodeFile& cf) {
  json j = {{"structure", structure_to_json(cf.structure)}};
  if (cf.method) j["method"] = *cf.method;
  if (cf.omega) j["omega"] = *cf.omega;
  if (cf.seed) j["seed"] = *cf.seed;
  j["G"] = cf.G.to_rows();
  j["claimed_distance"] = cf.claimed_distance;
  return j;
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline StructureFile load_structure(const std::string& path) { return structure_from_json(parse_json_text(read_text(path))); }
inline CodeFile load_code(const std::string& path) { return code_from_json(parse_json_text(read_text(path))); }

/// Compact JSON with one generator row per line.
inline std::string dump_code(const CodeFile& cf) {
  const json j = code_to_json(cf);
  std::string out = "{\n  \"structure\": " + j["structure"].dump() + ",\n";
  for (const char* key : {"method", "omega", "seed"})
    if (j.contains(key)) out += std::string("  \"") + key + "\": " + j[key].dump() + ",\n";
  out += "  \"G\": [\n";
  const auto& rows = j["G"];
  for (std::size_t i = 0; i < rows.size(); ++i) out += "    " + rows[i].dump() + (i + 1 < rows.size() ? ",\n" : "\n");
  out += "  ],\n  \"claimed_distance\": " + j["claimed_distance"].dump() + "\n}\n";
  return out;
}

}  // namespace ledc::io

#endif  // LEDC_IO_HPP
