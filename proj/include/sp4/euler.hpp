#pragma once

// Homological Euler characteristics of Sp4(Z) with coefficients in
// M_lambda: the torsion-class trace summation (reference route) and the
// closed forms (residue grid E for general weights, cubic plus coefficient
// table for symmetric powers).

#include <cstdint>

#include "sp4/traces.hpp"
#include "sp4/weyl.hpp"

namespace sp4 {

/// chi_h as the sum over the 56 torsion classes of
/// chi(C(T)) * Tr(T^{-1}, M_lambda). Always an integer; 0 for odd m1
/// (by actual cancellation of the sum).
Rat chi_h(const HighestWeight& lambda);
Rat chi_h(const HighestWeight& lambda, TraceOracle& oracle);

/// Closed form: chi~_A + chi~_{B,C} + chi~_K + chi~_N + E(m2 mod 12, (m1/2) mod 6),
/// 0 for odd m1.
Rat chi_h_closed(const HighestWeight& lambda);

/// Entry of the residue grid E: an affine form in (n1, n2) with denominator
/// dividing 432. row = m2 mod 12, col = (m1/2) mod 6.
Rat euler_residue_grid(int row, int col, int64_t n1, int64_t n2);

/// chi_h(Sp4(Z), Sym^n V) for even n = 2k:
/// -n^3/4320 - n^2/720 + a_k n + b_k + c_k with a, b periodic in k mod 30
/// and c_k = (-1)^(k/2)/2 for even k. Throws for odd n.
Rat chi_h_sym(int64_t n);

}  // namespace sp4
