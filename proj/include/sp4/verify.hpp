#pragma once

// Cross-path and fixture verification battery. Each check is independent
// and reports the first offending cell or identity on failure; `verify` in
// the CLI and the acceptance suite both drive these.

#include <cstdint>
#include <string>
#include <vector>

namespace sp4 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch, or a short summary when passing
};

CheckResult check_fixture_checksums();
CheckResult check_worked_examples();

/// Fixture grids, each entry via both computation routes where two exist.
CheckResult check_euler_sym_table();
CheckResult check_euler_weight_table();
CheckResult check_cuspidal_table();
CheckResult check_h_total_table();

/// Oracle recurrence vs the piecewise closed forms, all 56 classes.
CheckResult check_sym_trace_sweep(int64_t nmax = 240);
/// Oracle product formula vs the lookup matrices, all lambda with n1 <= cap.
CheckResult check_weight_trace_sweep(int64_t n1max = 60);
/// Oracle sequences agree within groups sharing a complex diagonalization.
CheckResult check_trace_conjugation_consistency(int64_t nmax = 120);

/// Orders, symplecticity, characteristic polynomials, centralizer-chi
/// fixture, family sums, transpose/negation relations.
CheckResult check_torsion_structure();
/// Exhaustive small-entry enumeration of the finite centralizers.
CheckResult check_finite_centralizer_orders();

CheckResult check_chi_vanishes_for_odd_m1(int64_t n1max = 20);
CheckResult check_eis_alternating_sum(int64_t n1max = 60);
CheckResult check_euler_degree_identity(int64_t n1max = 60);
CheckResult check_eis_plus_chi_identity(int64_t n1max = 60);
CheckResult check_nonnegativity_under_assumption(int64_t n1max = 60);
CheckResult check_boundary_eis_compatibility(int64_t n1max = 60);

CheckResult check_weyl_rows(int random_samples = 100);

/// The full battery at the default sweep sizes.
std::vector<CheckResult> run_verification();

}  // namespace sp4
