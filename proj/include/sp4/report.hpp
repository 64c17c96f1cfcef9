#pragma once

// Rendering of computed values as text grids, CSV, and canonical JSON.
// JSON emission is deterministic: ordered keys, rationals as numbers when
// integral (and within int64) or "p/q" strings otherwise, symbolic counts
// as {"const": ..., "zeta": ...} objects.

#include <string>

#include "json.hpp"
#include "sp4/cohomology.hpp"

namespace sp4 {

using ordered_json = nlohmann::ordered_json;

enum class TableKind { euler_sym, euler_weight, cuspidal, h_total };
enum class OutputFormat { text, csv, json };

TableKind table_kind_from_string(const std::string& s);
OutputFormat format_from_string(const std::string& s);

struct TableOptions {
  int64_t m1_max = 30;   // inclusive; even rows only
  int64_t m2_max = 14;   // inclusive
  int64_t k_max = 149;   // euler_sym only
  ZkMode zk;
};

ordered_json json_of_rat(const Rat& q);
ordered_json json_of_count(const SymbolicCount& c);

/// Affine form in the z = 2 * #Z convention used by the printed grids,
/// e.g. "z-4"; falls back to the zeta form when the coefficient is odd.
std::string z_string(const SymbolicCount& c);

/// Canonical serialization (no trailing newline).
std::string render_json(const ordered_json& j);

std::string emit_table(TableKind kind, const TableOptions& opts, OutputFormat fmt);

ordered_json hq_json(const HighestWeight& lambda, const ZkMode& mode);

ordered_json torsion_json();

}  // namespace sp4
