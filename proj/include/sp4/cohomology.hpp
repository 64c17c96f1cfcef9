#pragma once

// Cusp-form dimensions, Eisenstein and boundary cohomology by degree,
// the Eisenstein Euler characteristic (residue grids F1/F2/F3), cuspidal
// dimensions and the per-degree group cohomology of Sp4(Z).
//
// The one input the theory leaves unresolved is zeta = #Z_{2*m2+4}, the
// number of weight-(2*m2+4) eigenforms with nonvanishing central L-value.
// Quantities that depend on it are affine forms  constant + zeta_coeff * zeta
// and stay symbolic unless a resolution policy is supplied.

#include <cstdint>
#include <map>
#include <string>

#include "sp4/euler.hpp"
#include "sp4/weyl.hpp"

namespace sp4 {

/// Exact affine form c + z * zeta, zeta = #Z_{2*m2+4} of the weight in play.
struct SymbolicCount {
  Rat constant;
  Rat zeta_coeff;

  SymbolicCount() : constant(0), zeta_coeff(0) {}
  SymbolicCount(Rat c, Rat z) : constant(std::move(c)), zeta_coeff(std::move(z)) {}
  explicit SymbolicCount(long c) : constant(c), zeta_coeff(0) {}
  explicit SymbolicCount(const Rat& c) : constant(c), zeta_coeff(0) {}

  bool resolved() const { return zeta_coeff == 0; }
  Rat resolve(const Rat& zeta) const { return constant + zeta_coeff * zeta; }
  std::string str() const;

  friend SymbolicCount operator+(const SymbolicCount& a, const SymbolicCount& b) {
    return {a.constant + b.constant, a.zeta_coeff + b.zeta_coeff};
  }
  friend SymbolicCount operator-(const SymbolicCount& a, const SymbolicCount& b) {
    return {a.constant - b.constant, a.zeta_coeff - b.zeta_coeff};
  }
  friend SymbolicCount operator*(const Rat& s, const SymbolicCount& a) {
    return {s * a.constant, s * a.zeta_coeff};
  }
  friend bool operator==(const SymbolicCount& a, const SymbolicCount& b) {
    return a.constant == b.constant && a.zeta_coeff == b.zeta_coeff;
  }
};

/// Resolution policy for zeta.
struct ZkMode {
  enum class Policy { symbolic, assume_nonvanishing, explicit_values };
  Policy policy = Policy::symbolic;
  // weight k -> zeta value; weights not listed stay symbolic.
  std::map<int64_t, int64_t> values;

  static ZkMode symbolic() { return {}; }
  static ZkMode assume() { return {Policy::assume_nonvanishing, {}}; }
  static ZkMode explicit_values(std::map<int64_t, int64_t> v) {
    return {Policy::explicit_values, std::move(v)};
  }
};

/// Dimensions indexed by cohomological degree q = 0..5.
struct DegreeVector {
  std::array<SymbolicCount, 6> q;

  SymbolicCount total() const;
  SymbolicCount alternating_sum() const;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// dim S_k for level-one elliptic cusp forms: floor(k/12) minus one when
/// k = 2 mod 12; zero for odd k and k < 4.
int64_t dim_cusp_forms(int64_t k);

/// #Z_{2*m2+4} under the given policy: symbolic -> pure zeta term;
/// assume_nonvanishing -> dim S_{2*m2+4}; explicit -> the supplied value
/// (range-checked against [0, dim S]).
SymbolicCount zk(int64_t m2, const ZkMode& mode);

/// Eisenstein cohomology dimensions per degree (six parity cases).
DegreeVector h_eis_by_degree(const HighestWeight& lambda, const ZkMode& mode);

/// Dimensions of the boundary cohomology of the Borel-Serre
/// compactification per degree (six parity cases).
DegreeVector boundary_dims(const HighestWeight& lambda);

/// chi_Eis via the residue grids F1/F2/F3 (and the constant 2 at (0,0)).
SymbolicCount chi_eis(const HighestWeight& lambda, const ZkMode& mode);

/// chi_Eis as the alternating sum of h_eis_by_degree; must agree with
/// chi_eis as an affine form.
SymbolicCount chi_eis_from_degrees(const HighestWeight& lambda, const ZkMode& mode);

/// dim H^3_cusp = chi_Eis - chi_h. Throws std::domain_error if the value
/// resolves to a negative number.
SymbolicCount h_cusp(const HighestWeight& lambda, const ZkMode& mode);
SymbolicCount h_cusp(const HighestWeight& lambda, const ZkMode& mode, TraceOracle& oracle);

/// Per-degree dimensions h^0..h^5 of H^q(Sp4(Z), M_lambda); h^1 = h^5 = 0.
DegreeVector h_by_degree(const HighestWeight& lambda, const ZkMode& mode);
DegreeVector h_by_degree(const HighestWeight& lambda, const ZkMode& mode, TraceOracle& oracle);

/// Total dimension h(lambda) = sum over degrees.
SymbolicCount h_total(const HighestWeight& lambda, const ZkMode& mode);
SymbolicCount h_total(const HighestWeight& lambda, const ZkMode& mode, TraceOracle& oracle);

/// h_Eis + chi_Eis via the residue grids G1/G2/G3; equals
/// 2(h^0 + h^2 + h^4) in every regime.
SymbolicCount eis_plus_chi_grid(const HighestWeight& lambda, const ZkMode& mode);

}  // namespace sp4
