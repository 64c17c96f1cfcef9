#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sp4/weyl.hpp"

using namespace sp4;

TEST_CASE("lengths follow the table") {
  const auto& w = weyl_group();
  const int expected[8] = {0, 1, 1, 2, 2, 3, 3, 4};
  for (int i = 0; i < 8; ++i) CHECK(w[i].length == expected[i]);
}

TEST_CASE("identity row") {
  for (int64_t m1 : {0, 1, 5}) {
    for (int64_t m2 : {0, 2, 7}) {
      const HighestWeight l = weight(m1, m2);
      CHECK(dot_action(weyl_group()[0], l) == EpsPair{l.n1(), l.n2()});
    }
  }
}

TEST_CASE("longest element at the zero weight") {
  CHECK(dot_action(weyl_group()[7], weight(0, 0)) == EpsPair{-4, -2});
}

TEST_CASE("w3 at (2,1) by explicit reflection") {
  CHECK(dot_action(weyl_group()[3], weight(2, 1)) == EpsPair{-4, 4});
}

TEST_CASE("reflection composition matches closed forms for all rows") {
  for (int64_t n1 = 0; n1 <= 40; ++n1)
    for (int64_t m2 = 0; m2 <= n1; ++m2) {
      const HighestWeight l = weight(n1 - m2, m2);
      for (const auto& w : weyl_group())
        CHECK(dot_action(w, l) == dot_action_closed(w, l));
    }
}

TEST_CASE("Kostant representative sets") {
  auto labels = [](Parabolic p) {
    std::vector<std::string> out;
    for (const auto& w : kostant_representatives(p)) out.push_back(w.label());
    return out;
  };
  CHECK(labels(Parabolic::P1) == std::vector<std::string>{"w0", "w1", "w3", "w5"});
  CHECK(labels(Parabolic::P2) == std::vector<std::string>{"w0", "w2", "w4", "w6"});
  CHECK(labels(Parabolic::P0).size() == 8);

  // Ordered by length.
  for (Parabolic p : {Parabolic::P0, Parabolic::P1, Parabolic::P2}) {
    const auto reps = kostant_representatives(p);
    for (size_t i = 1; i < reps.size(); ++i)
      CHECK(reps[i - 1].length <= reps[i].length);
  }
}

TEST_CASE("negative weights are rejected") {
  CHECK_THROWS_AS(weight(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(weight(0, -2), std::invalid_argument);
}
