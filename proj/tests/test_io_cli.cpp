#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ledc/io.hpp"
#include "ledc_cli.hpp"

using namespace ledc;
namespace fs = std::filesystem;

namespace {

const std::string kData = LEDC_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ledc_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string join(const std::vector<Felt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].value);
  return s;
}

ErrorKind parse_kind(const std::string& text) {
  try {
    io::structure_from_json(io::parse_json_text(text));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Io, StructureDefaultsToConsecutivePositions) {
  const auto sf = io::structure_from_json(
      io::parse_json_text(R"({"q":13,"groups":[{"K":[1,2,3,4],"n":5},{"K":[2,3,4,5,6,7],"n":7}]})"));
  EXPECT_EQ(sf.q, 13u);
  EXPECT_EQ(sf.structure, fixture::example1_structure());
}

TEST(Io, ExplicitPositions) {
  const auto sf = io::structure_from_json(
      io::parse_json_text(R"({"q":7,"groups":[{"K":[1],"N":[2,4]},{"K":[1,2],"n":3,"N":[1,3,5]}]})"));
  EXPECT_EQ(sf.structure.N(1), (std::vector<int>{2, 4}));
  const auto again = io::structure_from_json(io::structure_to_json(sf));
  EXPECT_EQ(again, sf);
}

TEST(Io, StructureErrors) {
  EXPECT_EQ(parse_kind(R"({"q":10,"groups":[{"K":[1],"n":1}]})"), ErrorKind::NotPrime);
  EXPECT_EQ(parse_kind(R"({"groups":[{"K":[1],"n":1}]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"q":7,"groups":[]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"q":7,"groups":[{"K":[1,2],"n":1}]})"), ErrorKind::GroupTooSmall);
  EXPECT_EQ(parse_kind(R"({"q":7,"k":3,"groups":[{"K":[1,2],"n":3}]})"), ErrorKind::CoverageGap);
  EXPECT_EQ(parse_kind(R"({"q":7,"groups":[{"K":[1],"N":[1]},{"K":[1],"n":1}]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"q":7,"groups":[{"K":"x","n":1}]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind("{not json"), ErrorKind::ParseError);
}

TEST(Io, CodeFileRoundTrip) {
  const auto res = construct_cyclic(fixture::example1_structure(), make_field(13), Felt{2});
  const io::CodeFile cf{io::StructureFile{13, fixture::example1_structure()}, "cyclic", 2u, std::nullopt,
                        res.code.generator(), 5};
  EXPECT_EQ(io::code_from_json(io::code_to_json(cf)), cf);
  EXPECT_EQ(io::code_from_json(io::parse_json_text(io::dump_code(cf))), cf);
  const auto loaded = io::load_code(kData + "/example3_code.json");
  EXPECT_EQ(loaded, cf);
}

TEST(Io, CodeFileErrors) {
  const std::string head = R"({"structure":{"q":7,"groups":[{"K":[1],"n":2}]},)";
  auto kind = [](const std::string& text) {
    try {
      io::code_from_json(io::parse_json_text(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind(head + R"("G":[[1,7]],"claimed_distance":2})"), ErrorKind::ParseError);
  EXPECT_EQ(kind(head + R"("G":[[1]],"claimed_distance":2})"), ErrorKind::ParseError);
  EXPECT_EQ(kind(head + R"("G":[[1,1],[1,1]],"claimed_distance":2})"), ErrorKind::ParseError);
  EXPECT_EQ(kind(head + R"("G":[[1,1]]})"), ErrorKind::ParseError);
  EXPECT_EQ(kind(head + R"("method":"magic","G":[[1,1]],"claimed_distance":2})"), ErrorKind::ParseError);
  EXPECT_NO_THROW(io::code_from_json(io::parse_json_text(head + R"("G":[[1,1]],"claimed_distance":2})")));
}

TEST(Cli, BoundFixtures) {
  auto r = run_cli({"bound", kData + "/fig1_structure.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dmax=4\n"), std::string::npos);
  r = run_cli({"bound", kData + "/example1_structure.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dmax=5\n"), std::string::npos);
  EXPECT_NE(r.out.find("blocks="), std::string::npos);
}

TEST(Cli, BoundInputErrors) {
  const auto bad = scratch("bad.json");
  write(bad, "{\"q\": 7, ");
  auto r = run_cli({"bound", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
  const auto gap = scratch("gap.json");
  write(gap, R"({"q":7,"k":3,"groups":[{"K":[1,2],"n":3}]})");
  r = run_cli({"bound", gap.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("CoverageGap"), std::string::npos);
  EXPECT_EQ(run_cli({"bound"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ConstructThenVerify) {
  const auto out = scratch("fig1_nested.json");
  auto r = run_cli({"construct", kData + "/fig1_structure.json", "--method", "nested", "--q", "7", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto cf = io::load_code(out.string());
  EXPECT_EQ(cf.claimed_distance, 4);
  EXPECT_EQ(cf.method, "nested");
  r = run_cli({"verify", out.string(), "--distance-method", "exhaustive"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("distance=4 optimal=true"), std::string::npos);

  const auto rnd = scratch("fig1_random.json");
  r = run_cli({"construct", kData + "/fig1_structure.json", "--method", "random", "--q", "101", "--seed", "3", "--out",
           rnd.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::load_code(rnd.string()).seed, 3u);
  EXPECT_EQ(run_cli({"verify", rnd.string(), "--distance-method", "rank"}).code, 0);
}

TEST(Cli, ConstructCyclicReproducesFixture) {
  auto r = run_cli({"construct", kData + "/example1_structure.json", "--method", "cyclic", "--q", "13"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::code_from_json(io::parse_json_text(r.out)), io::load_code(kData + "/example3_code.json"));
  EXPECT_EQ(io::code_from_json(io::parse_json_text(r.out)).G.to_rows(), fixture::example3_canonical_rows);
}

TEST(Cli, ConstructPreconditionErrors) {
  auto r = run_cli({"construct", kData + "/example2_structure.json", "--method", "nested"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("n2-k2+1 >= t"), std::string::npos);
  r = run_cli({"construct", kData + "/fig1_structure.json", "--method", "cyclic"});
  EXPECT_EQ(r.code, 3);
  r = run_cli({"construct", kData + "/example1_structure.json", "--method", "cyclic", "--omega", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run_cli({"construct", kData + "/fig1_structure.json", "--method", "magic"}).code, 2);
}

TEST(Cli, CyclicWithoutOverlapRoutesToNested) {
  const auto s = scratch("disjoint.json");
  write(s, R"({"q":13,"groups":[{"K":[1,2],"n":4},{"K":[3,4],"n":4}]})");
  const auto r = run_cli({"construct", s.string(), "--method", "cyclic"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::code_from_json(io::parse_json_text(r.out)).method, "nested");
}

TEST(Cli, VerifyFixtures) {
  auto r = run_cli({"verify", kData + "/example3_code.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("distance=5 optimal=true"), std::string::npos);
  r = run_cli({"verify", kData + "/example2_code.json", "--distance-method", "both"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("distance=4 optimal=false"), std::string::npos);
  EXPECT_NE(r.out.find("distance_exhaustive=4"), std::string::npos);
}

TEST(Cli, VerifyTamperedEntry) {
  auto cf = io::load_code(kData + "/fig1_code.json");
  cf.G(0, 9) = Felt{1};  // outside the support of x1
  const auto p = scratch("tampered_support.json");
  write(p, io::dump_code(cf));
  auto r = run_cli({"verify", p.string()});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("support=FAIL"), std::string::npos);

  cf = io::load_code(kData + "/fig1_code.json");
  cf.G(1, 1) = cf.G(1, 0);  // two equal columns in group 1
  cf.G(2, 1) = cf.G(2, 0);
  write(p, io::dump_code(cf));
  r = run_cli({"verify", p.string()});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("local_mds=FAIL groups=1"), std::string::npos);
}

TEST(Cli, VerifyClaimMismatch) {
  auto cf = io::load_code(kData + "/fig1_code.json");
  cf.claimed_distance = 5;
  const auto p = scratch("overclaim.json");
  write(p, io::dump_code(cf));
  const auto r = run_cli({"verify", p.string()});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("result=FAIL"), std::string::npos);
}

TEST(Cli, EncodeDecode) {
  const std::string fig = kData + "/fig1_code.json";
  auto r = run_cli({"encode", fig, "--data", "0,0,0,0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0,0,0,0,0,0,0,0,0,0\n");

  const auto code = io::load_code(fig).code();
  const std::vector<Felt> x{Felt{3}, Felt{1}, Felt{4}, Felt{1}, Felt{5}};
  const auto c = encode(code, x);
  r = run_cli({"encode", fig, "--data", join(x)});
  EXPECT_EQ(r.out, join(c) + "\n");

  // Any three erasures are corrected.
  std::vector<std::string> recv;
  for (Felt v : c) recv.push_back(std::to_string(v.value));
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int e = b + 1; e < 10; ++e) {
        auto w = recv;
        w[static_cast<std::size_t>(a)] = w[static_cast<std::size_t>(b)] = w[static_cast<std::size_t>(e)] = "?";
        std::string text;
        for (std::size_t j = 0; j < w.size(); ++j) text += (j ? "," : "") + w[j];
        ASSERT_EQ(run_cli({"decode", fig, "--received", text}).out, join(x) + "\n");
      }
}

TEST(Cli, DecodeUnrecoverablePattern) {
  const std::string fig = kData + "/fig1_code.json";
  const auto code = io::load_code(fig).code();
  // Erasing N1 = {1..4} leaves only group 2, which cannot see x1.
  bool found = false;
  for (int mask = 0; mask < 1024 && !found; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 4) continue;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < 10; ++j)
      if (!(mask >> j & 1)) cols.push_back(j);
    std::vector<std::size_t> rows{0, 1, 2, 3, 4};
    if (rank(submatrix(code.generator(), rows, cols)) == 5) continue;
    std::string text;
    for (int j = 0; j < 10; ++j) text += std::string(j ? "," : "") + ((mask >> j & 1) ? "?" : "0");
    const auto r = run_cli({"decode", fig, "--received", text});
    EXPECT_EQ(r.code, 5);
    EXPECT_NE(r.err.find("UnrecoverableErasurePattern"), std::string::npos);
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Cli, MalformedVectors) {
  const std::string fig = kData + "/fig1_code.json";
  EXPECT_EQ(run_cli({"encode", fig, "--data", "1,2,3"}).code, 2);
  EXPECT_EQ(run_cli({"encode", fig, "--data", "1,2,3,4,7"}).code, 2);
  EXPECT_EQ(run_cli({"encode", fig, "--data", "1,2,x,4,5"}).code, 2);
  EXPECT_EQ(run_cli({"decode", fig, "--received", "?,?"}).code, 2);
  EXPECT_EQ(run_cli({"decode", fig, "--received", "1,2,3,4,5,6,0,0,0,-1"}).code, 2);
}

TEST(Cli, DemoLocalVersusCooperative) {
  const std::string ex = kData + "/example3_code.json";
  auto r = run_cli({"demo", ex, "--fail", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("group 1: lost 2/5, local tolerance 1 -> local recovery impossible"), std::string::npos);
  EXPECT_NE(r.out.find("global: recovered all data"), std::string::npos);
  EXPECT_NE(r.out.find("verdict=cooperative"), std::string::npos);

  r = run_cli({"demo", ex, "--fail", "1,2,6,7"});
  EXPECT_NE(r.out.find("global: recovered all data"), std::string::npos);

  r = run_cli({"demo", ex});
  EXPECT_NE(r.out.find("verdict=local"), std::string::npos);

  EXPECT_EQ(run_cli({"demo", ex, "--fail", "0"}).code, 2);
  EXPECT_EQ(run_cli({"demo", ex, "--fail", "3,3"}).code, 2);
  EXPECT_EQ(run_cli({"demo", ex, "--fail", "13"}).code, 2);
}

TEST(Cli, DemoAdversarialFailure) {
  // Some set of d = 5 failures must defeat global recovery.
  const std::string ex = kData + "/example3_code.json";
  bool lost = false;
  for (int mask = 0; mask < (1 << 12) && !lost; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 5) continue;
    std::string fail;
    for (int j = 0; j < 12; ++j)
      if (mask >> j & 1) fail += (fail.empty() ? "" : ",") + std::to_string(j + 1);
    lost = run_cli({"demo", ex, "--fail", fail}).out.find("global: unrecoverable") != std::string::npos;
  }
  EXPECT_TRUE(lost);
}
