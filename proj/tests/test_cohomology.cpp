#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sp4/cohomology.hpp"
#include "sp4/verify.hpp"

using namespace sp4;

namespace {
DegreeVector plain(std::initializer_list<long> qs) {
  DegreeVector v;
  int i = 0;
  for (long q : qs) v.q[i++] = SymbolicCount(q);
  return v;
}
}  // namespace

TEST_CASE("cusp form dimensions") {
  CHECK(dim_cusp_forms(12) == 1);
  CHECK(dim_cusp_forms(14) == 0);
  CHECK(dim_cusp_forms(3) == 0);
  CHECK(dim_cusp_forms(0) == 0);
  CHECK(dim_cusp_forms(2) == 0);
  CHECK(dim_cusp_forms(16) == 1);
  CHECK(dim_cusp_forms(22) == 1);
  CHECK(dim_cusp_forms(24) == 2);
  CHECK(dim_cusp_forms(26) == 1);
  CHECK(dim_cusp_forms(144) == 12);
  CHECK(dim_cusp_forms(146) == 11);
}

TEST_CASE("zeta policies") {
  CHECK(zk(10, ZkMode::symbolic()) == SymbolicCount(Rat(0), Rat(1)));
  CHECK(zk(2, ZkMode::assume()) == SymbolicCount(0L));     // dim S_8 = 0
  CHECK(zk(10, ZkMode::assume()) == SymbolicCount(2L));    // dim S_24 = 2
  CHECK(zk(10, ZkMode::explicit_values({{24, 1}})) == SymbolicCount(1L));
  // Weights not listed stay symbolic.
  CHECK(zk(4, ZkMode::explicit_values({{24, 1}})) == SymbolicCount(Rat(0), Rat(1)));
  CHECK_THROWS_AS(zk(10, ZkMode::explicit_values({{24, 3}})), std::invalid_argument);
}

TEST_CASE("symbolic count rendering") {
  CHECK(SymbolicCount(Rat(-4), Rat(2)).str() == "-4+2*zeta");
  CHECK(SymbolicCount(Rat(0), Rat(1)).str() == "zeta");
  CHECK(SymbolicCount(7L).str() == "7");
}

TEST_CASE("Eisenstein dimensions by degree") {
  CHECK(h_eis_by_degree(weight(0, 0), ZkMode::symbolic()) == plain({1, 0, 1, 0, 0, 0}));

  // m1 even > 0, m2 = 0: q3 = dim S_{m1+4} + 1, q4 = dim S_{m1+2}.
  const DegreeVector v = h_eis_by_degree(weight(10, 0), ZkMode::symbolic());
  CHECK(v.q[3] == SymbolicCount(dim_cusp_forms(14) + 1));
  CHECK(v.q[4] == SymbolicCount(dim_cusp_forms(12)));

  // m1 = 0, m2 odd: everything in q3.
  const DegreeVector u = h_eis_by_degree(weight(0, 9), ZkMode::symbolic());
  CHECK(u.q[3] == SymbolicCount(1 + 2 * dim_cusp_forms(12) + dim_cusp_forms(22)));
  CHECK(u.q[2] == SymbolicCount(0L));

  // m1 = 0, m2 even > 0: zeta enters q2 and q3.
  const DegreeVector s = h_eis_by_degree(weight(0, 10), ZkMode::symbolic());
  CHECK(s.q[2] == SymbolicCount(Rat(0), Rat(1)));
  CHECK(s.q[3] == SymbolicCount(Rat(dim_cusp_forms(24)), Rat(-1)));
  CHECK(s.q[4] == SymbolicCount(2 * dim_cusp_forms(12)));

  // Odd m1 kills the sheaf.
  CHECK(h_eis_by_degree(weight(3, 5), ZkMode::symbolic()) == DegreeVector{});
}

TEST_CASE("boundary dimensions by degree") {
  CHECK(boundary_dims(weight(0, 0)) == plain({1, 0, 1, 1, 0, 1}));
  CHECK(boundary_dims(weight(10, 0)) == plain({0, 1, 1, 1, 1, 0}));
  CHECK(boundary_dims(weight(0, 3)) == plain({0, 0, 1, 1, 0, 0}));
  CHECK(boundary_dims(weight(1, 1)) == DegreeVector{});
}

TEST_CASE("Eisenstein Euler characteristic") {
  CHECK(chi_eis(weight(0, 0), ZkMode::symbolic()) == SymbolicCount(2L));
  CHECK(chi_eis(weight(18, 10), ZkMode::symbolic()) == SymbolicCount(1L));
  // F3 entry at l2 = 10 is exactly z = 2 zeta.
  CHECK(chi_eis(weight(0, 10), ZkMode::symbolic()) == SymbolicCount(Rat(0), Rat(2)));
  CHECK(chi_eis(weight(0, 4), ZkMode::symbolic()) == SymbolicCount(Rat(-1), Rat(2)));
  CHECK(chi_eis(weight(3, 1), ZkMode::symbolic()) == SymbolicCount(0L));
}

TEST_CASE("cuspidal dimensions") {
  CHECK(h_cusp(weight(18, 10), ZkMode::symbolic()) == SymbolicCount(50L));
  CHECK(h_cusp(weight(0, 0), ZkMode::symbolic()) == SymbolicCount(0L));
  CHECK(h_cusp(weight(12, 4), ZkMode::symbolic()) == SymbolicCount(4L));
  // (0, 4): z - 2 symbolically; forcing zeta = 0 resolves it negative.
  CHECK(h_cusp(weight(0, 4), ZkMode::symbolic()) == SymbolicCount(Rat(-2), Rat(2)));
  CHECK_THROWS_AS(h_cusp(weight(0, 4), ZkMode::explicit_values({{12, 0}})),
                  std::domain_error);
  CHECK(h_cusp(weight(0, 4), ZkMode::assume()) == SymbolicCount(0L));
}

TEST_CASE("per-degree dimensions and totals") {
  CHECK(h_by_degree(weight(0, 0), ZkMode::symbolic()) == plain({1, 0, 1, 0, 0, 0}));
  CHECK(h_total(weight(0, 0), ZkMode::symbolic()) == SymbolicCount(2L));
  CHECK(h_total(weight(18, 70), ZkMode::symbolic()) == SymbolicCount(4389L));
  CHECK(h_total(weight(10, 1), ZkMode::symbolic()) == SymbolicCount(4L));
  CHECK(h_total(weight(2, 1), ZkMode::symbolic()) == SymbolicCount(0L));

  // h^1 and h^5 vanish everywhere.
  for (int64_t n1 = 0; n1 <= 12; ++n1)
    for (int64_t m2 = 0; m2 <= n1; ++m2) {
      const DegreeVector v = h_by_degree(weight(n1 - m2, m2), ZkMode::symbolic());
      CHECK(v.q[1] == SymbolicCount(0L));
      CHECK(v.q[5] == SymbolicCount(0L));
    }
}

TEST_CASE("identity battery at reduced sweep sizes") {
  for (const auto& r :
       {check_eis_alternating_sum(24), check_euler_degree_identity(24),
        check_eis_plus_chi_identity(24), check_nonnegativity_under_assumption(24),
        check_boundary_eis_compatibility(24), check_chi_vanishes_for_odd_m1(15)}) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
