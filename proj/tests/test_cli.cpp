#include <doctest.h>

#include "cyc/cli.hpp"
#include "cyc/json_io.hpp"

using namespace cyc;

namespace {

Json parse_out(const CliResult& r) { return Json::parse(r.output); }

}  // namespace

TEST_CASE("supernat verbs") {
  CliResult gcd = run_cli({"supernat", "gcd"}, R"(["2^inf*3", "12"])");
  CHECK(gcd.status == 0);
  CHECK(parse_out(gcd).get<std::string>() == "12");
  CliResult lcm = run_cli({"supernat", "lcm"}, R"(["4", "6"])");
  CHECK(parse_out(lcm).get<std::string>() == "12");
  CliResult nest = run_cli({"supernat", "nest", "--N", "2^inf", "--bound", "8"});
  CHECK(parse_out(nest) == Json::parse("[1,2,4,8]"));
}

TEST_CASE("orbit verbs") {
  CliResult comp = run_cli({"orbit", "compose"},
                           R"({"N": "inf", "maps": [{"src":1,"tgt":2,"offset":"1/4"},
                                                    {"src":2,"tgt":4,"offset":"1/8"}]})");
  CHECK(comp.status == 0);
  CHECK(parse_out(comp).at("offset").get<std::string>() == "1/8");
  CliResult pull = run_cli({"orbit", "pullback"},
                           R"({"N": "12", "f": {"src":2,"tgt":12,"offset":"0"},
                               "g": {"src":3,"tgt":12,"offset":"0"}})");
  Json comps = parse_out(pull).at("components");
  CHECK(comps.size() == 2);
  CHECK(comps[0].at("level").get<long>() == 1);
  // A valid square with all identities passes; perturbing one filler fails
  // with exit status 1.
  std::string simplex = R"({"N": "inf", "levels": [1,2,4,4],
    "maps": {"01": "0", "02": "0", "03": "0", "12": "0", "13": "0", "23": "0"},
    "fillers": {"012": "0", "013": "0", "023": "0", "123": "FILL"}})";
  std::string good = simplex;
  good.replace(good.find("FILL"), 4, "0");
  CHECK(run_cli({"orbit", "simplex-check"}, good).status == 0);
  std::string bad = simplex;
  bad.replace(bad.find("FILL"), 4, "1/8");
  CliResult r = run_cli({"orbit", "simplex-check"}, bad);
  CHECK(r.status == 1);
  CHECK_FALSE(parse_out(r).at("pass").get<bool>());
}

TEST_CASE("burnside verbs") {
  CliResult mul = run_cli({"burnside", "mul", "--level", "6"},
                          R"([{"level":6,"coeffs":{"2":1}},{"level":6,"coeffs":{"3":1}}])");
  CHECK(mul.status == 0);
  CHECK(parse_out(mul) == Json::parse(R"({"coeffs":{"1":1},"level":6})"));
  CliResult comp = run_cli({"burnside", "compose"},
                           R"([{"src":2,"tgt":4,"coeffs":{"2":1}},
                               {"src":4,"tgt":2,"coeffs":{"2":1}}])");
  CHECK(parse_out(comp).at("coeffs").at("2").get<long>() == 2);
  CliResult table = run_cli({"burnside", "table", "--level", "4", "--out", "csv"});
  CHECK(table.output.find("k,l") == 0);
}

TEST_CASE("witt verbs") {
  CliResult add = run_cli({"witt", "add", "--ring", "Z", "--level", "2"},
                          R"([{"level":2,"components":{"1":1,"2":0}},
                              {"level":2,"components":{"1":1,"2":0}}])");
  CHECK(add.status == 0);
  CHECK(parse_out(add) == Json::parse(R"({"components":{"1":2,"2":-1},"level":2})"));
  CliResult frob = run_cli({"witt", "frob", "--ring", "Z", "--to", "1"},
                           R"({"level":2,"components":{"1":3,"2":5}})");
  CHECK(parse_out(frob).at("components").at("1").get<long>() == 19);
  CliResult gh = run_cli({"witt", "ghost", "--ring", "Zmod:8"},
                         R"({"level":2,"components":{"1":1,"2":1}})");
  CHECK(parse_out(gh).at("ghost").at("2").get<long>() == 3);
  CliResult polys = run_cli({"witt", "polys", "--level", "2", "--op", "sum"});
  Json p2 = parse_out(polys).at("polys").at("2");
  CHECK(p2.at("x1*y1").get<long>() == -1);
  CHECK(p2.at("x2").get<long>() == 1);
  CliResult versch = run_cli({"witt", "versch", "--ring", "Q", "--to", "4"},
                             R"({"level":2,"components":{"1":"1/3","2":"0"}})");
  CHECK(parse_out(versch).at("components").at("2").get<std::string>() == "1/3");
}

TEST_CASE("mackey verbs round-trip through validate") {
  CliResult data = run_cli({"mackey", "witt", "--ring", "Z", "--bound", "6"});
  CHECK(data.status == 0);
  CliResult ok = run_cli({"mackey", "validate"}, data.output);
  CHECK(ok.status == 0);
  CHECK(parse_out(ok).at("pass").get<bool>());
  CliResult bdata = run_cli({"mackey", "burnside", "--bound", "12"});
  CHECK(run_cli({"mackey", "validate"}, bdata.output).status == 0);
  // eval of the identity h-morphism is the identity matrix.
  Json payload{{"data", parse_out(bdata)},
               {"h", Json{{"src", 12}, {"tgt", 12}, {"coeffs", Json{{"12", 1}}}}}};
  CliResult ev = run_cli({"mackey", "eval"}, payload.dump());
  Json mat = parse_out(ev).at("matrix");
  CHECK(mat.size() == 6);
  CHECK(mat[0][0].get<long>() == 1);
}

TEST_CASE("cyclotomic verbs") {
  CliResult gfp = run_cli({"cyclotomic", "gfp", "--p", "2", "--level", "6", "--ring", "Z"});
  CHECK(gfp.status == 0);
  CHECK(parse_out(gfp).at("group").at("rank").get<long>() == 4);
  CliResult vw =
      run_cli({"cyclotomic", "verify-witt", "--ring", "Z", "--primes", "2,3", "--bound", "6"});
  CHECK(vw.status == 0);
  CHECK(parse_out(vw).at("pass").get<bool>());
  CliResult rec = run_cli({"cyclotomic", "recollement", "--p", "2", "--bound", "12", "--base",
                           "burnside"});
  CHECK(rec.status == 0);
  CliResult rest = run_cli(
      {"cyclotomic", "restrictions", "--ring", "Z", "--from", "4", "--to", "2", "--primes", "2"});
  CHECK(parse_out(rest).at("matrix") == Json::parse("[[1,0,0],[0,1,0]]"));
  CliResult tw = run_cli({"cyclotomic", "twisted-assoc", "--max", "12"});
  CHECK(tw.status == 0);
  Json twj = parse_out(tw);
  CHECK(twj.at("adopted").get<std::string>() == "r/n + s");
  CHECK_FALSE(twj.at("first_scale_associative").get<bool>());
}

TEST_CASE("dga verbs") {
  CliResult mul = run_cli({"dga", "mul", "--bound", "12"},
                          R"([{"a[4,2,2]": 1}, {"a[2,2,4]": 1}])");
  CHECK(mul.status == 0);
  CHECK(parse_out(mul).at("a[4,2,4]").get<long>() == 1);
  CliResult table = run_cli({"dga", "table", "--bound", "4", "--out", "csv"});
  CHECK(table.status == 0);
  CHECK(table.output.find("x,y,coeff,result") == 0);
}

TEST_CASE("exit codes and determinism") {
  // Malformed payload: input error.
  CHECK(run_cli({"witt", "add", "--ring", "Z"}, "{oops").status == 2);
  // Missing payload: input error.
  CHECK(run_cli({"witt", "add", "--ring", "Z"}, "").status == 2);
  // Unknown ring.
  CHECK(run_cli({"witt", "add", "--ring", "F17"}, "[]").status == 2);
  // Non-divisor levels in a witt vector.
  CHECK(run_cli({"witt", "ghost", "--ring", "Z"}, R"({"level":2,"components":{"3":1}})").status ==
        2);
  // Byte-identical reruns.
  for (int t = 0; t < 2; ++t) {
    CliResult a = run_cli({"mackey", "witt", "--ring", "Zmod:4", "--bound", "12"});
    CliResult b = run_cli({"mackey", "witt", "--ring", "Zmod:4", "--bound", "12"});
    CHECK(a.output == b.output);
    CliResult c = run_cli({"burnside", "table", "--level", "12", "--out", "csv"});
    CliResult d = run_cli({"burnside", "table", "--level", "12", "--out", "csv"});
    CHECK(c.output == d.output);
  }
  // Help is available.
  CHECK(run_cli({"--help"}).status == 0);
  CHECK(run_cli({}).status == 0);
}
