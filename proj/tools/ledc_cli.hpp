#ifndef LEDC_TOOLS_CLI_HPP
#define LEDC_TOOLS_CLI_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ledc/io.hpp"
#include "ledc/ledc.hpp"

namespace ledc::cli {

/// Stable process exit codes.
enum Exit : int {
  kOk = 0,
  kInput = 2,
  kPrecondition = 3,
  kVerification = 4,
  kDecode = 5,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PreconditionViolated:
    case ErrorKind::FieldTooSmall:
    case ErrorKind::NotPrimitive:
    case ErrorKind::DegenerateSystem:
    case ErrorKind::ExhaustedAttempts:
      return kPrecondition;
    case ErrorKind::TooLarge:
      return kVerification;
    case ErrorKind::UnrecoverableErasurePattern:
    case ErrorKind::Inconsistent:
    case ErrorKind::Underdetermined:
    case ErrorKind::SingularSubmatrix:
      return kDecode;
    default:
      return kInput;
  }
}

namespace detail {

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

inline std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    out.push_back(cur);
  }
  return out;
}

inline long long parse_int(const std::string& tok) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "not an integer: \"" + tok + "\"");
  }
  if (used != tok.size()) throw Error(ErrorKind::ParseError, "not an integer: \"" + tok + "\"");
  return v;
}

inline Felt parse_symbol(const std::string& tok, const PrimeField& f) {
  const long long v = parse_int(tok);
  if (v < 0 || v >= static_cast<long long>(f.order()))
    throw Error(ErrorKind::ParseError, "symbol " + tok + " outside [0, " + std::to_string(f.order()) + ")");
  return Felt{static_cast<std::uint32_t>(v)};
}

inline std::vector<Felt> parse_data(const std::string& text, const PrimeField& f, std::size_t k) {
  std::vector<Felt> out;
  for (const auto& tok : split(text)) out.push_back(parse_symbol(tok, f));
  if (out.size() != k)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(k) + " data symbols, got " + std::to_string(out.size()));
  return out;
}

inline ReceivedWord parse_received(const std::string& text, const PrimeField& f, std::size_t n) {
  ReceivedWord out;
  for (const auto& tok : split(text)) {
    if (tok == "?") out.emplace_back(std::nullopt);
    else out.emplace_back(parse_symbol(tok, f));
  }
  if (out.size() != n)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " received symbols, got " + std::to_string(out.size()));
  return out;
}

inline std::vector<int> parse_positions(const std::string& text, int n) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const auto& tok : split(text)) {
    const long long p = parse_int(tok);
    if (p < 1 || p > n) throw Error(ErrorKind::ParseError, "position " + tok + " outside 1.." + std::to_string(n));
    if (std::find(out.begin(), out.end(), static_cast<int>(p)) != out.end())
      throw Error(ErrorKind::ParseError, "position " + tok + " listed twice");
    out.push_back(static_cast<int>(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline DistanceMethod parse_method(const std::string& name, const LedcCode& code) {
  if (name == "exhaustive") return DistanceMethod::Exhaustive;
  if (name == "rank") return DistanceMethod::Rank;
  if (name == "both") return DistanceMethod::Both;
  if (name == "auto") return message_count(code) > kAutoExhaustiveLimit ? DistanceMethod::Rank : DistanceMethod::Both;
  throw Error(ErrorKind::ParseError, "unknown distance method \"" + name + "\"");
}

}  // namespace detail

inline int cmd_bound(const std::string& path, std::ostream& out) {
  const auto sf = io::load_structure(path);
  const auto res = dmax(sf.structure);
  out << "dmax=" << res.value << "\n";
  out << "blocks=" << detail::join(res.blocks) << "\n";
  out << "data=" << detail::join(res.data) << "\n";
  return kOk;
}

struct ConstructOptions {
  std::string structure_path;
  std::string method;
  std::optional<std::uint64_t> q;
  std::uint64_t seed = 0;
  std::uint64_t attempts = 20;
  std::optional<std::uint32_t> omega;
  std::string out_path = "-";
};

inline int cmd_construct(const ConstructOptions& opt, std::ostream& out) {
  const auto sf = io::load_structure(opt.structure_path);
  const std::uint64_t q = opt.q.value_or(sf.q);
  const PrimeField f = make_field(q);
  const LocalityStructure& s = sf.structure;

  std::string method = opt.method;
  std::optional<std::uint32_t> omega;
  std::optional<std::uint64_t> seed;
  std::optional<LedcCode> code;
  if (method == "cyclic" && s.m() == 2 && two_group_layout(s).t == 0) method = "nested";
  if (method == "nested") {
    code = construct_nested(s, f).code;
  } else if (method == "cyclic") {
    std::optional<Felt> w;
    if (opt.omega) w = Felt{*opt.omega};
    auto res = construct_cyclic(s, f, w);
    omega = res.ingredients.omega.value;
    code = std::move(res.code);
  } else if (method == "random") {
    seed = opt.seed;
    code = construct_random(s, f, opt.seed, opt.attempts).code;
  } else {
    throw Error(ErrorKind::ParseError, "unknown method \"" + method + "\"");
  }

  const int distance = min_distance_rank(*code);
  const int bound = dmax(s).value;
  io::CodeFile cf{io::StructureFile{q, s}, method, omega, seed, code->generator(), distance};
  const std::string text = io::dump_code(cf);
  if (opt.out_path == "-") {
    out << text;
  } else {
    std::ofstream file(opt.out_path);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write " + opt.out_path);
    file << text;
    out << "method=" << method << " q=" << q << " distance=" << distance << " dmax=" << bound
        << " optimal=" << (distance == bound ? "true" : "false") << "\n";
    out << "wrote " << opt.out_path << "\n";
  }
  return kOk;
}

inline int cmd_verify(const std::string& path, const std::string& method_name, std::ostream& out) {
  const auto cf = io::load_code(path);
  const LedcCode code = cf.code();
  const auto rep = verify_ledc(code, detail::parse_method(method_name, code));
  std::vector<int> failed;
  for (std::size_t i = 0; i < rep.local_mds.group_ok.size(); ++i)
    if (!rep.local_mds.group_ok[i]) failed.push_back(static_cast<int>(i + 1));

  out << "support=" << (rep.support_ok ? "ok" : "FAIL") << "\n";
  out << "local_mds=" << (failed.empty() ? "ok" : "FAIL groups=" + detail::join(failed)) << "\n";
  out << "rank=" << (rep.full_rank ? "full" : "deficient") << "\n";
  if (rep.distance_exhaustive) out << "distance_exhaustive=" << *rep.distance_exhaustive << "\n";
  if (rep.distance_rank) out << "distance_rank=" << *rep.distance_rank << "\n";
  out << "distance=" << rep.distance << " optimal=" << (rep.optimal ? "true" : "false") << "\n";
  out << "dmax=" << rep.dmax << " claimed_distance=" << cf.claimed_distance << "\n";
  const bool pass = rep.ok() && rep.distance == cf.claimed_distance;
  out << "result=" << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kVerification;
}

inline int cmd_encode(const std::string& path, const std::string& data, std::ostream& out) {
  const auto cf = io::load_code(path);
  const LedcCode code = cf.code();
  const auto x = detail::parse_data(data, code.field(), code.k());
  out << detail::join(encode(code, x)) << "\n";
  return kOk;
}

inline int cmd_decode(const std::string& path, const std::string& received, std::ostream& out) {
  const auto cf = io::load_code(path);
  const LedcCode code = cf.code();
  const auto w = detail::parse_received(received, code.field(), code.n());
  out << detail::join(erasure_decode(code, w)) << "\n";
  return kOk;
}

/// Fails the listed nodes, then reports which groups repair on their own and
/// whether pooling every surviving node recovers the data.
inline int cmd_demo(const std::string& path, const std::string& fail, std::ostream& out) {
  const auto cf = io::load_code(path);
  const LedcCode code = cf.code();
  const auto& s = code.structure();
  const PrimeField& f = code.field();
  const auto failed = detail::parse_positions(fail, s.n());

  std::vector<Felt> x;
  for (int i = 1; i <= s.k(); ++i) x.push_back(f.elem(i));
  const auto c = encode(code, x);
  ReceivedWord w(c.begin(), c.end());
  for (int p : failed) w[static_cast<std::size_t>(p - 1)] = std::nullopt;

  out << "data=" << detail::join(x) << "\n";
  out << "failed=" << (failed.empty() ? "none" : detail::join(failed)) << "\n";
  bool all_local = true;
  for (std::size_t g = 1; g <= s.m(); ++g) {
    std::vector<Observation> obs;
    for (int p : s.N(g))
      if (w[static_cast<std::size_t>(p - 1)]) obs.push_back({p, *w[static_cast<std::size_t>(p - 1)]});
    const int lost = s.n_of(g) - static_cast<int>(obs.size());
    out << "group " << g << ": lost " << lost << "/" << s.n_of(g) << ", local tolerance " << s.n_of(g) - s.k_of(g)
        << " -> ";
    bool ok = false;
    if (static_cast<int>(obs.size()) >= s.k_of(g)) {
      const auto got = local_decode(code, g, obs);
      std::vector<Felt> want;
      for (int i : s.K(g)) want.push_back(x[static_cast<std::size_t>(i - 1)]);
      ok = got == want;
    }
    all_local = all_local && ok;
    out << (ok ? "local recovery ok" : "local recovery impossible") << "\n";
  }
  bool global_ok = false;
  try {
    global_ok = erasure_decode(code, w) == x;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnrecoverableErasurePattern) throw;
  }
  out << "global: " << (global_ok ? "recovered all data" : "unrecoverable") << "\n";
  out << "verdict=" << (all_local ? "local" : global_ok ? "cooperative" : "lost") << "\n";
  return kOk;
}

/// Runs the tool on argv-style arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally encodable and decodable codes: bounds, constructions, verification"};
  app.require_subcommand(1);

  std::string structure_path, code_path, dist_method = "auto", data, received, fail;
  ConstructOptions copt;

  auto* bound = app.add_subcommand("bound", "print the optimal achievable distance of a structure");
  bound->add_option("structure", structure_path, "structure JSON file")->required();

  auto* construct = app.add_subcommand("construct", "build a generator matrix and write a code file");
  construct->add_option("structure", copt.structure_path, "structure JSON file")->required();
  construct->add_option("--method", copt.method, "nested | cyclic | random")
      ->required()
      ->check(CLI::IsMember({"nested", "cyclic", "random"}));
  construct->add_option("--q", copt.q, "field order (defaults to the structure file's q)");
  construct->add_option("--seed", copt.seed, "seed for the random method");
  construct->add_option("--attempts", copt.attempts, "sample budget for the random method");
  construct->add_option("--omega", copt.omega, "primitive element for the cyclic method");
  construct->add_option("--out", copt.out_path, "output path, - for stdout");

  auto* verify = app.add_subcommand("verify", "check support, local MDS, distance and optimality");
  verify->add_option("code", code_path, "code JSON file")->required();
  verify->add_option("--distance-method", dist_method, "exhaustive | rank | both | auto")
      ->check(CLI::IsMember({"exhaustive", "rank", "both", "auto"}));

  auto* enc = app.add_subcommand("encode", "encode a data vector");
  enc->add_option("code", code_path)->required();
  enc->add_option("--data", data, "comma-separated k symbols")->required();

  auto* dec = app.add_subcommand("decode", "recover data from a word with erasures");
  dec->add_option("code", code_path)->required();
  dec->add_option("--received", received, "comma-separated n symbols, ? for erasure")->required();

  auto* demo = app.add_subcommand("demo", "local versus cooperative recovery after node failures");
  demo->add_option("code", code_path)->required();
  demo->add_option("--fail", fail, "comma-separated failed positions (1-based)");

  std::vector<std::string> storage{"ledc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (*bound) return cmd_bound(structure_path, out);
    if (*construct) return cmd_construct(copt, out);
    if (*verify) return cmd_verify(code_path, dist_method, out);
    if (*enc) return cmd_encode(code_path, data, out);
    if (*dec) return cmd_decode(code_path, received, out);
    if (*demo) return cmd_demo(code_path, fail, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kInput;
}

}  // namespace ledc::cli

#endif  // LEDC_TOOLS_CLI_HPP
