#pragma once

// The 56 conjugacy-class representatives of torsion elements of Sp4(Z),
// built from 2x2 blocks via the star / dotplus / circ interleavings, with
// their orders, characteristic-polynomial labels, centralizer orbifold
// Euler characteristics and trace-family tags.

#include <string>
#include <vector>

#include "sp4/exact.hpp"

namespace sp4 {

enum class BlockKind { star, dotplus, circ };

struct BlockOp {
  BlockKind kind;
  Mat2 left;
  Mat2 right;
};

/// star:    left on rows/cols {0,2}, right on rows/cols {1,3}
/// dotplus: block diagonal
/// circ:    left on rows {0,2} x cols {1,3}, right on rows {1,3} x cols {0,2}
Mat4 block_product(const BlockOp& op);

Mat4 star(const Mat2& l, const Mat2& r);
Mat4 dotplus(const Mat2& l, const Mat2& r);
Mat4 circ(const Mat2& l, const Mat2& r);

/// Grouping of classes that share one closed-form trace rule; the letter(s)
/// name the centralizer cases the group covers.
enum class TraceFamily { A, BC, DE, F, F2, GHI, J, K, LM, M, N, O };

std::string to_string(TraceFamily f);

/// Sum of the centralizer Euler characteristics over the whole family
/// (both the plain and the sign-carrying classes).
Rat family_chi(TraceFamily f);

struct TorsionClass {
  int id = 0;                   // 1..56
  Mat4 matrix;
  unsigned order = 0;
  std::string charpoly_label;   // product of cyclotomic factors, e.g. "Phi1^2*Phi3"
  char case_label = '?';        // centralizer case A..O
  TraceFamily family = TraceFamily::A;
  bool sign_m1 = false;         // trace carries a (-1)^m1 factor
  Rat centralizer_chi;
};

/// All 56 classes, ids 1..56, each validated at construction: symplectic,
/// exact order, characteristic polynomial equal to its labelled cyclotomic
/// product, pairwise distinct. Throws std::logic_error on any mismatch.
const std::vector<TorsionClass>& torsion_classes();

/// Class with the given 1-based id.
const TorsionClass& torsion_class(int id);

/// Least k <= cap with m^k = id; throws if none.
unsigned order_of(const Mat4& m, unsigned cap = 12);

/// Coefficients (ascending) of the named cyclotomic product, degree 4.
std::array<Int, 5> charpoly_of_label(const std::string& label);

}  // namespace sp4
