#include "sp4/weyl.hpp"

#include <stdexcept>

namespace sp4 {

namespace {

using SR = SimpleReflection;

EpsPair reflect(SR s, EpsPair v) {
  // alpha1 = eps1 - eps2 swaps the coordinates; alpha2 = 2*eps2 negates
  // the second.
  if (s == SR::s1) return {v.b, v.a};
  return {v.a, -v.b};
}

WeylElement make(int index, std::vector<SR> word) {
  WeylElement w;
  w.index = index;
  w.length = static_cast<int>(word.size());
  w.word = std::move(word);
  return w;
}

}  // namespace

HighestWeight weight(int64_t m1, int64_t m2) {
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("weight: m1, m2 must be >= 0");
  return {m1, m2};
}

const std::array<WeylElement, 8>& weyl_group() {
  static const std::array<WeylElement, 8> w = {
      make(0, {}),
      make(1, {SR::s1}),
      make(2, {SR::s2}),
      make(3, {SR::s1, SR::s2}),
      make(4, {SR::s2, SR::s1}),
      make(5, {SR::s1, SR::s2, SR::s1}),
      make(6, {SR::s2, SR::s1, SR::s2}),
      make(7, {SR::s1, SR::s2, SR::s1, SR::s2}),
  };
  return w;
}

EpsPair dot_action(const WeylElement& w, const HighestWeight& lambda) {
  // delta = 2*eps1 + eps2.
  EpsPair v{lambda.n1() + 2, lambda.n2() + 1};
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) v = reflect(*it, v);
  return {v.a - 2, v.b - 1};
}

EpsPair dot_action_closed(const WeylElement& w, const HighestWeight& lambda) {
  const int64_t m1 = lambda.m1, m2 = lambda.m2;
  switch (w.index) {
    case 0: return {m1 + m2, m2};
    case 1: return {m2 - 1, m1 + m2 + 1};
    case 2: return {m1 + m2, -m2 - 2};
    case 3: return {-m2 - 3, m1 + m2 + 1};
    case 4: return {m2 - 1, -m1 - m2 - 3};
    case 5: return {-m1 - m2 - 4, m2};
    case 6: return {-m2 - 3, -m1 - m2 - 3};
    case 7: return {-m1 - m2 - 4, -m2 - 2};
  }
  throw std::invalid_argument("dot_action_closed: bad Weyl index");
}

std::vector<WeylElement> kostant_representatives(Parabolic p) {
  const auto& w = weyl_group();
  switch (p) {
    case Parabolic::P0:
      return {w.begin(), w.end()};
    case Parabolic::P1:
      return {w[0], w[1], w[3], w[5]};
    case Parabolic::P2:
      return {w[0], w[2], w[4], w[6]};
  }
  throw std::invalid_argument("kostant_representatives: bad parabolic");
}

}  // namespace sp4
