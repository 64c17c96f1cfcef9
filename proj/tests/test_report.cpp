#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sp4/fixtures.hpp"
#include "sp4/report.hpp"

using namespace sp4;

TEST_CASE("rational serialization") {
  CHECK(render_json(json_of_rat(rat(5))) == "5");
  CHECK(render_json(json_of_rat(rat(-7, 3))) == "\"-7/3\"");
  CHECK(render_json(json_of_rat(rat(6, 3))) == "2");
}

TEST_CASE("symbolic count serialization") {
  CHECK(render_json(json_of_count(SymbolicCount(50L))) == "50");
  CHECK(render_json(json_of_count(SymbolicCount(Rat(-4), Rat(2)))) ==
        "{\"const\":-4,\"zeta\":2}");
}

TEST_CASE("z-convention strings") {
  CHECK(z_string(SymbolicCount(Rat(-4), Rat(2))) == "z-4");
  CHECK(z_string(SymbolicCount(Rat(0), Rat(2))) == "z");
  CHECK(z_string(SymbolicCount(Rat(2), Rat(4))) == "2z+2");
  CHECK(z_string(SymbolicCount(7L)) == "7");
  // Odd zeta coefficients cannot be written in z; fall back to zeta.
  CHECK(z_string(SymbolicCount(Rat(0), Rat(1))) == "zeta");
}

TEST_CASE("json round-trips byte-identically") {
  TableOptions opts;
  opts.m1_max = 6;
  opts.m2_max = 6;
  const std::string emitted =
      emit_table(TableKind::cuspidal, opts, OutputFormat::json);
  const auto parsed = ordered_json::parse(emitted);
  CHECK(render_json(parsed) + "\n" == emitted);

  const std::string hq = render_json(hq_json(weight(0, 0), ZkMode::symbolic()));
  CHECK(hq == "{\"h\":[1,0,1,0,0,0],\"total\":2}");
  CHECK(render_json(ordered_json::parse(hq)) == hq);
}

TEST_CASE("csv has the named header and one row per cell") {
  TableOptions opts;
  opts.m1_max = 2;
  opts.m2_max = 1;
  const std::string csv = emit_table(TableKind::euler_weight, opts, OutputFormat::csv);
  CHECK(csv == "m1,m2,value\n0,0,2\n0,1,-1\n2,0,-1\n2,1,0\n");
}

TEST_CASE("euler_sym layout follows the printed table") {
  TableOptions opts;
  opts.k_max = 16;
  const std::string csv = emit_table(TableKind::euler_sym, opts, OutputFormat::csv);
  CHECK(csv.rfind("k,value\n0,2\n1,-1\n", 0) == 0);
  CHECK(csv.find("\n16,-14\n") != std::string::npos);
}

TEST_CASE("torsion dump carries the classification") {
  const ordered_json j = torsion_json();
  REQUIRE(j.at("torsion_classes").size() == 56);
  const auto& t18 = j["torsion_classes"][17];
  CHECK(t18["id"] == 18);
  CHECK(t18["order"] == 5);
  CHECK(t18["charpoly"] == "Phi5");
  CHECK(t18["chi"] == "1/10");
}

TEST_CASE("fixture checksums match the manifest") {
  CHECK_NOTHROW(verify_fixture_checksums());
}

TEST_CASE("grid fixtures parse with symbolic entries") {
  const WeightGrid g = load_cuspidal_table();
  REQUIRE(g.m1.size() == 15);
  REQUIRE(g.m2.size() == 15);
  CHECK(g.values[0][2] == SymbolicCount(Rat(0), Rat(2)));    // "z"
  CHECK(g.values[0][12] == SymbolicCount(Rat(-4), Rat(2)));  // "z-4"
  CHECK(g.values[5][7] == SymbolicCount(12L));
}
