#pragma once

// Embedded reference tables, stored as versioned JSON files and verified
// against a checksum manifest at load time. The fixture directory defaults
// to the repository's data/ directory and can be overridden with the
// SP4_FIXTURE_DIR environment variable.

#include <cstdint>
#include <string>
#include <vector>

#include "sp4/cohomology.hpp"
#include "sp4/exact.hpp"

namespace sp4 {

std::string fixture_dir();

/// FNV-1a 64-bit hash of a byte string.
uint64_t fnv1a64(const std::string& bytes);

/// Verifies every fixture file against MANIFEST.json; throws
/// std::runtime_error naming the first offending file.
void verify_fixture_checksums();

/// chi_h(Sp4(Z), Sym^{2k} V) for k = 0..149.
std::vector<int64_t> load_euler_sym_table();

struct WeightGrid {
  std::vector<int64_t> m1;                     // row weights
  std::vector<int64_t> m2;                     // column weights
  std::vector<std::vector<SymbolicCount>> values;  // [row][col]
};

/// chi_h grid, m1 = 0..30 even, m2 = 0..14 (integral entries).
WeightGrid load_euler_weight_table();

/// Cuspidal-dimension grid, m1 = 0..28 even, m2 = 0..14; the m1 = 0 row
/// holds affine forms in z = 2 * #Z.
WeightGrid load_cuspidal_table();

/// Total-dimension grid, same layout as the cuspidal one.
WeightGrid load_h_total_table();

struct CentralizerCaseRow {
  std::string case_label;
  std::vector<int> class_ids;
  Rat chi;
};

/// Centralizer Euler characteristics by case letter.
std::vector<CentralizerCaseRow> load_centralizer_chi_table();

struct WeylRow {
  std::string label;
  std::vector<std::string> word;
  int length;
  // dot action (a, b) as affine forms in (m1, m2):
  int64_t a_m1, a_m2, a_c;
  int64_t b_m1, b_m2, b_c;
};

/// The eight Weyl group rows with their closed-form dot actions.
std::vector<WeylRow> load_weyl_table();

}  // namespace sp4
