#include <doctest.h>

#include <sstream>

#include "proccat/cli.hpp"
#include "proccat/descriptor.hpp"

using namespace proccat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "proccat");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("descriptors") {
  auto s = TimeScale::range(3);
  CHECK(parse_descriptor("unit |>''[inf] unit", s)->carrier({0, 2})->size() == 3);
  CHECK(parse_descriptor("box' unit", s)->carrier({0, 2})->size() == 1);
  CHECK(parse_descriptor("dia' unit", s)->carrier({0, 2})->size() == 2);
  CHECK(parse_descriptor("unit |>''[1] unit", s)->carrier({2, 2})->size() == 0);
  CHECK(parse_descriptor("exp(flag(2), flag(2))", s)->carrier({0, 2})->size() == 4);
  CHECK(parse_descriptor("prod(flag(2), flag(3))", s)->carrier({0, 0})->size() == 6);
  CHECK(parse_descriptor("sum(unit, unit, unit)", s)->carrier({0, 0})->size() == 3);
  CHECK(parse_descriptor("(unit |>[inf] unit)", s)->carrier({0, 2})->size() == 4);
  // Right associative: unit |>'' (unit |>'' unit).
  auto nested = parse_descriptor("unit |>''[inf] unit |>''[inf] unit", s);
  CHECK(nested == parse_descriptor("unit |>''[inf] (unit |>''[inf] unit)", s));
  CHECK(parse_descriptor("unit |>''[max] unit", s) == parse_descriptor("unit |>''[2] unit", s));
  CHECK(parse_descriptor("unit |>''[min] unit", s)->carrier({1, 1})->size() == 0);
  CHECK(parse_descriptor("before(1)", s)->carrier({1, 1})->size() == 0);
  CHECK(parse_descriptor("unit |>'[2] empty", s)->carrier({0, 1})->size() == 1);
  for (const char* bad : {"unit |>'' unit", "unit |>''[7] unit", "flag(x)", "prod(unit", "nothing", "unit unit", ""})
    CHECK_THROWS_AS(parse_descriptor(bad, s), DescriptorError);
}

TEST_CASE("scale validate exit codes") {
  auto a = cli({"scale", "validate", "finite(0,1,2)"});
  CHECK(a.code == 0);
  CHECK(a.out == "Accept\n");
  CHECK(cli({"scale", "validate", "union(desc_above(0), desc_above(1))"}).code == 0);
  auto r = cli({"scale", "validate", "asc_below(1)"});
  CHECK(r.code == 1);
  CHECK(r.out == "Reject(witness limit 1)\n");
  CHECK(cli({"scale", "validate", "finite(0,"}).code == 2);
  CHECK(cli({"scale", "validate", "union(desc_above(1), finite(2))"}).code == 2);
}

TEST_CASE("dump lists a carrier") {
  auto d = cli({"dump", "unit |>''[inf] unit", "0", "2", "--scale", "finite(0,1,2)"});
  CHECK(d.code == 0);
  CHECK(d.out == "term(1; ; •)\nterm(2; 1→•; •)\nongoing(1→•, 2→•)\nsize: 3\n");
  CHECK(cli({"dump", "unit |>''[1] unit", "2", "2"}).out == "size: 0\n");
  CHECK(cli({"dump", "unit", "2", "1"}).code == 2);
  CHECK(cli({"dump", "unit |>'' unit", "0", "2"}).code == 2);
  CHECK(cli({"dump", "unit", "0", "2", "--scale", "asc_below(1)"}).code == 2);
}

TEST_CASE("check exit codes") {
  CHECK(cli({"check", "--scale", "finite(0,1)", "--suites", "fig1,fig2"}).code == 0);
  auto m = cli({"check", "--suites", "fig2", "--mutate", "vartheta", "--format", "machine"});
  CHECK(m.code == 1);
  CHECK(m.out.find("\"verdict\":\"fail\",\"witness\":{\"location\"") != std::string::npos);
  auto c = cli({"check", "--suites", "uniqueness", "--cap", "1", "--format", "machine"});
  CHECK(c.code == 3);
  CHECK(c.out.find("\"verdict\":\"cap_exceeded\"") != std::string::npos);
  CHECK(cli({"check", "--suites", "nonsense"}).code == 2);
  CHECK(cli({"check", "--cap", "-4"}).code == 2);
  CHECK(cli({"check", "--mutate", "gamma"}).code == 2);
  CHECK(cli({"check", "--format", "xml"}).code == 2);
  CHECK(cli({"check", "--scale", "desc_above(0)"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("machine records have a fixed field order") {
  LawReport r = pass_report("fig1", "x", "d");
  CHECK(machine_line(r) == R"j({"suite":"fig1","instance":"x","verdict":"pass","witness":null,"millis":null,"detail":"d"})j");
  auto f = fail_report("fig1", "x", {"(0,1)", "e", "l", "r", "n"});
  CHECK(machine_line(f) ==
        R"j({"suite":"fig1","instance":"x","verdict":"fail","witness":{"location":"(0,1)","element":"e","lhs":"l","rhs":"r","note":"n"},"millis":null,"detail":""})j");
  CHECK(exit_code({r}) == 0);
  CHECK(exit_code({r, f}) == 1);
  LawReport cap{"u", "i", Verdict::CapExceeded, std::nullopt, std::nullopt, ""};
  CHECK(exit_code({cap, r}) == 3);
  CHECK(exit_code({cap, f}) == 1);
}

TEST_CASE("identical check runs produce identical output") {
  auto a = cli({"check", "--scale", "finite(0,1)", "--format", "machine"});
  auto b = cli({"check", "--scale", "finite(0,1)", "--format", "machine"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
