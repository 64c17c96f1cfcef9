#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sp4/euler.hpp"
#include "sp4/verify.hpp"

using namespace sp4;

TEST_CASE("torsion-sum values") {
  CHECK(chi_h(weight(0, 0)) == 2);
  CHECK(chi_h(weight(20, 19)) == -265);
  CHECK(chi_h(weight(2, 0)) == -1);
}

TEST_CASE("closed-form values") {
  CHECK(chi_h_closed(weight(20, 19)) == -265);
  CHECK(chi_h_closed(weight(0, 1)) == -1);
  CHECK(chi_h_closed(weight(30, 14)) == -283);
  CHECK(chi_h_closed(weight(0, 0)) == 2);
}

TEST_CASE("symmetric-power formula") {
  CHECK(chi_h_sym(0) == 2);
  CHECK(chi_h_sym(2) == -1);
  CHECK(chi_h_sym(28) == -9);
  CHECK_THROWS_AS(chi_h_sym(3), std::invalid_argument);
}

TEST_CASE("both routes agree and vanish for odd m1, n1 <= 26") {
  TraceOracle oracle;
  for (int64_t n1 = 0; n1 <= 26; ++n1)
    for (int64_t m2 = 0; m2 <= n1; ++m2) {
      const HighestWeight l = weight(n1 - m2, m2);
      const Rat by_sum = chi_h(l, oracle);
      CAPTURE(l.m1);
      CAPTURE(l.m2);
      CHECK(is_integer(by_sum));
      if (l.m1 % 2 == 0)
        CHECK(by_sum == chi_h_closed(l));
      else
        CHECK(by_sum == 0);
    }
}

TEST_CASE("symmetric powers agree with the weight route") {
  for (int64_t k = 0; k <= 40; ++k) CHECK(chi_h_sym(2 * k) == chi_h(weight(2 * k, 0)));
}

TEST_CASE("residue grid rejects bad indices") {
  CHECK_THROWS_AS(euler_residue_grid(12, 0, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(euler_residue_grid(0, 6, 0, 0), std::out_of_range);
}
