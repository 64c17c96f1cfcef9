#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "sp4/torsion.hpp"
#include "sp4/verify.hpp"

using namespace sp4;

TEST_CASE("block products interleave as displayed") {
  const Mat2 id2 = mat2({1, 0, 0, 1});
  const Mat2 w = mat2({0, -1, 1, -1});
  const Mat2 j2 = mat2({0, -1, 1, 0});

  CHECK(star(id2, -id2) == mat4({1, 0, 0, 0,   //
                                 0, -1, 0, 0,  //
                                 0, 0, 1, 0,   //
                                 0, 0, 0, -1}));
  CHECK(star(id2, -id2) == torsion_class(3).matrix);

  const Mat2 u = mat2({1, 0, 1, -1});
  CHECK(dotplus(u, u.transpose()) == mat4({1, 0, 0, 0,   //
                                           1, -1, 0, 0,  //
                                           0, 0, 1, 1,   //
                                           0, 0, 0, -1}));
  CHECK(dotplus(u, u.transpose()) == torsion_class(4).matrix);

  CHECK(circ(id2, j2) == torsion_class(39).matrix);
  CHECK(torsion_class(39).charpoly_label == "Phi8");

  CHECK(star(w, w) == mat4({0, 0, -1, 0,  //
                            0, 0, 0, -1,  //
                            1, 0, -1, 0,  //
                            0, 1, 0, -1}));

  BlockOp op{BlockKind::circ, -id2, id2};
  CHECK(block_product(op) == torsion_class(13).matrix);
}

TEST_CASE("the classification holds 56 validated classes") {
  const auto& all = torsion_classes();
  REQUIRE(all.size() == 56);
  std::set<int> ids;
  for (const auto& t : all) ids.insert(t.id);
  CHECK(ids.size() == 56);
  CHECK(*ids.begin() == 1);
  CHECK(*ids.rbegin() == 56);
}

TEST_CASE("spot values") {
  CHECK(torsion_class(18).order == 5);
  CHECK(torsion_class(18).matrix == mat4({0, 1, 0, 0,   //
                                          0, 0, -1, 0,  //
                                          0, 0, -1, 1,  //
                                          1, 1, -1, 0}));
  CHECK(torsion_class(1).centralizer_chi == rat(-1, 1440));
  CHECK(torsion_class(5).centralizer_chi == rat(1, 72));
  CHECK(torsion_class(2).order == 2);
  CHECK(torsion_class(47).order == 12);
  CHECK(torsion_class(49).order == 12);
}

TEST_CASE("order_of") {
  CHECK(order_of(Mat4::Identity()) == 1);
  CHECK(order_of(torsion_class(2).matrix) == 2);
  CHECK(order_of(torsion_class(47).matrix) == 12);
  CHECK_THROWS_AS(order_of(torsion_class(47).matrix, 11), std::domain_error);
}

TEST_CASE("family coefficients") {
  CHECK(family_chi(TraceFamily::A) == rat(-1, 720));
  CHECK(family_chi(TraceFamily::K) == rat(4, 5));
  CHECK(family_chi(TraceFamily::O) == rat(1, 3));
  CHECK(family_chi(TraceFamily::BC) == rat(7, 144));

  // The eight K-classes contribute 1/10 each.
  Rat sum(0);
  for (int id : {18, 19, 20, 21, 43, 44, 45, 46}) {
    CHECK(torsion_class(id).centralizer_chi == rat(1, 10));
    sum += torsion_class(id).centralizer_chi;
  }
  sum.canonicalize();
  CHECK(sum == family_chi(TraceFamily::K));
}

TEST_CASE("structure battery") {
  const CheckResult r = check_torsion_structure();
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("finite centralizers have the advertised orders") {
  const CheckResult r = check_finite_centralizer_orders();
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("cyclotomic label lookup") {
  CHECK(charpoly_of_label("Phi1^4") == std::array<Int, 5>{1, -4, 6, -4, 1});
  CHECK(charpoly_of_label("Phi12") == std::array<Int, 5>{1, 0, -1, 0, 1});
  CHECK(charpoly_of_label("Phi3*Phi4") == std::array<Int, 5>{1, 1, 2, 1, 1});
  CHECK_THROWS(charpoly_of_label("Phi7"));
}
