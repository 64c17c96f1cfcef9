#pragma once

// The Weyl group of Sp4 (type C2), the dot action w.l = w(l + delta) - delta
// on highest weights, and the minimal-length coset representatives for the
// three standard parabolic subgroups.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sp4 {

/// Highest weight m1*l1 + m2*l2 of an irreducible Sp4 representation.
/// In epsilon-coordinates the weight is (n1, n2) = (m1 + m2, m2).
struct HighestWeight {
  int64_t m1 = 0;
  int64_t m2 = 0;

  int64_t n1() const { return m1 + m2; }
  int64_t n2() const { return m2; }

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

HighestWeight weight(int64_t m1, int64_t m2);

/// Element a*eps1 + b*eps2 of the weight lattice.
struct EpsPair {
  int64_t a = 0;
  int64_t b = 0;
  friend bool operator==(const EpsPair&, const EpsPair&) = default;
};

enum class SimpleReflection { s1, s2 };

/// One of the eight Weyl group elements w0..w7, with its reduced word.
struct WeylElement {
  int index = 0;                        // 0..7
  std::vector<SimpleReflection> word;   // reduced word, composition order
  int length = 0;

  std::string label() const { return "w" + std::to_string(index); }
};

/// The eight elements, ordered w0..w7 (by length).
const std::array<WeylElement, 8>& weyl_group();

/// w(l + delta) - delta, computed by composing the simple reflections of
/// w's word on epsilon-coordinates (s1 swaps, s2 negates the second).
/// A word "s1 o s2" acts as function composition: s2 first.
EpsPair dot_action(const WeylElement& w, const HighestWeight& lambda);

/// Closed form of the dot action for row w.index; used to cross-check the
/// reflection composition.
EpsPair dot_action_closed(const WeylElement& w, const HighestWeight& lambda);

enum class Parabolic { P0, P1, P2 };

/// Kostant representatives W^P, ordered by length.
std::vector<WeylElement> kostant_representatives(Parabolic p);

}  // namespace sp4
