// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is exact; runtimes are bounded by construction
// (the heaviest sweep is the full trace cross-validation).

#include <chrono>
#include <iostream>
#include <vector>

#include "sp4/verify.hpp"

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::vector<sp4::CheckResult>& results) {
  bool pass = true;
  std::string detail;
  for (const auto& r : results) {
    if (!r.pass && detail.empty()) detail = r.name + ": " + r.detail;
    pass = pass && r.pass;
  }
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
  if (!pass) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
}

}  // namespace

int main() {
  using namespace sp4;

  criterion(1, "worked examples: chi_h(20,19) = -265, h_cusp(18,10) = 50, h_total(18,70) = 4389",
            {check_worked_examples()});
  criterion(2, "euler_sym table, 150 values, torsion sum and cubic formula",
            {check_euler_sym_table()});
  criterion(3, "euler_weight table, 16x15 grid, both routes",
            {check_euler_weight_table()});
  criterion(4, "cuspidal table, 15x15 grid, affine forms in zeta",
            {check_cuspidal_table()});
  criterion(5, "h_total table, 15x15 grid, affine forms in zeta",
            {check_h_total_table()});
  criterion(6, "trace sweep: oracle vs closed forms, n <= 240 and n1 <= 60",
            {check_sym_trace_sweep(240), check_weight_trace_sweep(60),
             check_trace_conjugation_consistency(240)});
  criterion(7, "torsion structure: symplectic, orders, charpolys, family sums",
            {check_torsion_structure(), check_finite_centralizer_orders()});
  criterion(8, "identity suite: odd-m1 vanishing, Eisenstein sums, Euler identity, grid identity, non-negativity",
            {check_chi_vanishes_for_odd_m1(20), check_eis_alternating_sum(60),
             check_euler_degree_identity(60), check_eis_plus_chi_identity(60),
             check_nonnegativity_under_assumption(60),
             check_boundary_eis_compatibility(60)});
  criterion(9, "Weyl rows by reflection composition, 100 random weights; Kostant sets",
            {check_weyl_rows(100)});

  if (failures != 0) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
