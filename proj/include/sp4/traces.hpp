#pragma once

// Traces of the torsion classes on Sym^n V and on general M_lambda, by two
// independent routes: the generating-function recurrence (oracle) and the
// closed-form piecewise formulas / lookup matrices. All traces are taken on
// T^{-1}, the convention used by the torsion-sum Euler characteristic.

#include <cstdint>
#include <vector>

#include "sp4/exact.hpp"
#include "sp4/torsion.hpp"
#include "sp4/weyl.hpp"

namespace sp4 {

struct SymTraceSeq {
  int source_id = 0;        // torsion class id
  std::vector<Int> values;  // h_0 .. h_nmax, h_n = Tr(T^{-1}, Sym^n V)
};

/// Per-class cache of oracle sequences. Sequences are extended on demand;
/// share one instance across a sweep, or rely on the convenience overloads
/// below which build a transient one.
class TraceOracle {
 public:
  /// h_0..h_nmax for the class, by the linear recurrence whose coefficients
  /// are the elementary symmetric functions of the eigenvalues of T^{-1}
  /// (read off char_poly of the inverse), h_0 = 1, h_{n<0} = 0.
  const std::vector<Int>& sym(const TorsionClass& t, size_t nmax);

  /// Tr(T^{-1}, M_lambda) via the symmetric-power product formula:
  /// H_{n1,n2} = H_{n1}(H_{n2} + H_{n2-2}) - (H_{n1+1} + H_{n1-1}) H_{n2-1}.
  Int weight_trace(const TorsionClass& t, const HighestWeight& lambda);

 private:
  std::vector<Int> seqs_[56];
  std::array<Int, 5> recur_[56];  // char poly of T^{-1}; [4] == 1 marks init
};

SymTraceSeq sym_trace_oracle(const TorsionClass& t, size_t nmax);

/// The class's closed-form value of Tr(T^{-1}, Sym^n V), including the
/// (-1)^n factor carried by the negated classes.
Int sym_trace_closed(const TorsionClass& t, int64_t n);

/// Oracle-route trace on M_lambda (transient cache).
Int weight_trace(const TorsionClass& t, const HighestWeight& lambda);

/// Closed-form trace on M_lambda: the class's lookup matrix evaluated at
/// (n1 mod size, n2 mod size), with the (-1)^m1 sign where the class
/// carries it. Family A uses the Weyl dimension polynomial instead.
Int weight_trace_closed(const TorsionClass& t, const HighestWeight& lambda);

/// dim M_lambda = (n1+2)(n2+1)((n1+2)^2 - (n2+1)^2) / 6.
Int weyl_dimension(const HighestWeight& lambda);

/// Side length of a family's lookup matrix (0 for family A).
int trace_matrix_size(TraceFamily f);

/// Entry (row, col) of the family's lookup matrix as a function of (n1, n2).
/// Entries are rational expressions that evaluate to integers whenever
/// (row, col) = (n1 mod size, n2 mod size).
Rat trace_matrix_entry(TraceFamily f, int row, int col, int64_t n1, int64_t n2);

}  // namespace sp4
