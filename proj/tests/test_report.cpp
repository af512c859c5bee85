#include <doctest.h>

#include <algorithm>

#include "zetaforms/report.hpp"

using namespace zetaforms;

TEST_CASE("number serialization carries precision and provenance") {
  json j = real_json(Real(Rat(1, 3), 128));
  CHECK(j["prec_bits"] == 128);
  CHECK(j["provenance"] == "computed");
  CHECK(j["value"].get<std::string>().substr(0, 6) == "3.3333");

  json q = rat_json(Rat(-7, 3));
  CHECK(q["num"] == "-7");
  CHECK(q["den"] == "3");
}

TEST_CASE("basis JSON is deterministic across rebuilds") {
  std::string a = to_json(build_basis(5)).dump();
  std::string b = to_json(build_basis(5)).dump();
  CHECK(a == b);
  json parsed = json::parse(a);
  CHECK(parsed["b"] == 5);
  CHECK(parsed["c"].size() == 3);
  // c_{1,1}^{(5)} = 1/16: W = X - 2X^3 + X^5 has Y-coefficient 1/2 - 2(3/8) + 5/16
  CHECK(parsed["c"][0][0]["num"] == "1");
  CHECK(parsed["c"][0][0]["den"] == "16");
}

TEST_CASE("extraction instance round trip with rational delta") {
  json j = {{"instance",
             {{"k", 1},
              {"N", 8},
              {"M", 8},
              {"lambda", {{1, 2, 3, 4, 5, 6, 7, 8}}},
              {"xi",
               {{1, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, 0, 0, 0, 0, 0, 0},
                {"1/2", 0, 0, 0, 0, 0, 0, 0},
                {0, {{"num", "2"}, {"den", "3"}}, 1, 0, 0, 0, 0, 0},
                {0, 0, 0, 1, 0, 0, 0, 0},
                {0, 0, 0, 0, 1, 0, 0, 0},
                {0, 0, 0, 0, 0, 1, 0, 0},
                {0, 0, 0, 0, 0, 0, 1, 1}}}}},
            {"request", {{"delta", "1/2"}, {"p", 2}, {"m", {3}}}}};
  ExtractionInstance inst = instance_from_json(j["instance"]);
  SpreadRequest req = request_from_json(j["request"]);
  CHECK(inst.xi[2][0] == Rat(1, 2));
  CHECK(inst.xi[3][1] == Rat(2, 3));
  CHECK(inst.M == 8);
  CHECK(req.delta == Rat(1, 2));
  REQUIRE(req.m.size() == 1);
  auto out = extract(inst, req);
  CHECK(certify(inst, req, out));
}

TEST_CASE("form family JSON") {
  FormParams p{3, 1, Rat(1), 1};
  json j = to_json(extract_linear_form(p));
  CHECK(j["F"]["num"] == "2");
  CHECK(j["ltilde"]["1"]["num"] == "577");
  CHECK(j["ltilde"]["1"]["den"] == "8");
  CHECK(j["ell"]["3"]["num"] == "-60");
}

TEST_CASE("growth CSV has a header and one line per row") {
  GrowthTable t = growth_diagnostics(3, 1, Rat(1), {1, 2}, 96);
  std::string csv = growth_csv(t);
  CHECK(csv.find("n,coeff_root") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
