#include "sp4/cohomology.hpp"

#include <stdexcept>

namespace sp4 {

std::string SymbolicCount::str() const {
  if (resolved()) return to_string(constant);
  std::string z = zeta_coeff == 1    ? "zeta"
                  : zeta_coeff == -1 ? "-zeta"
                                     : to_string(zeta_coeff) + "*zeta";
  if (constant == 0) return z;
  if (zeta_coeff > 0) return to_string(constant) + "+" + z;
  return to_string(constant) + z;
}

SymbolicCount DegreeVector::total() const {
  SymbolicCount s;
  for (const auto& v : q) s = s + v;
  return s;
}

SymbolicCount DegreeVector::alternating_sum() const {
  SymbolicCount s;
  for (int i = 0; i < 6; ++i) s = (i % 2 == 0) ? s + q[i] : s - q[i];
  return s;
}

int64_t dim_cusp_forms(int64_t k) {
  if (k < 4 || k % 2 != 0) return 0;
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

SymbolicCount zk(int64_t m2, const ZkMode& mode) {
  if (m2 < 0) throw std::invalid_argument("zk: m2 < 0");
  const int64_t k = 2 * m2 + 4;
  switch (mode.policy) {
    case ZkMode::Policy::symbolic:
      return {Rat(0), Rat(1)};
    case ZkMode::Policy::assume_nonvanishing:
      return SymbolicCount(Rat(dim_cusp_forms(k)));
    case ZkMode::Policy::explicit_values: {
      auto it = mode.values.find(k);
      if (it == mode.values.end()) return {Rat(0), Rat(1)};
      if (it->second < 0 || it->second > dim_cusp_forms(k))
        throw std::invalid_argument("zk: explicit value out of [0, dim S_" +
                                    std::to_string(k) + "]");
      return SymbolicCount(Rat(it->second));
    }
  }
  throw std::invalid_argument("zk: bad policy");
}

namespace {

SymbolicCount cnt(int64_t c) { return SymbolicCount(Rat(c)); }
SymbolicCount dimS(int64_t k) { return cnt(dim_cusp_forms(k)); }

}  // namespace

DegreeVector h_eis_by_degree(const HighestWeight& lambda, const ZkMode& mode) {
  const int64_t m1 = lambda.m1, m2 = lambda.m2;
  DegreeVector v;
  if (m1 % 2 != 0) return v;
  if (m1 == 0 && m2 == 0) {
    v.q[0] = cnt(1);
    v.q[2] = cnt(1);
  } else if (m1 == 0 && m2 % 2 == 0) {
    const SymbolicCount z = zk(m2, mode);
    v.q[2] = z;
    v.q[3] = dimS(2 * m2 + 4) - z;
    v.q[4] = Rat(2) * dimS(m2 + 2);
  } else if (m2 == 0) {
    v.q[3] = dimS(m1 + 4) + cnt(1);
    v.q[4] = dimS(m1 + 2);
  } else if (m2 % 2 == 0) {
    v.q[3] = dimS(m1 + 2 * m2 + 4);
    v.q[4] = cnt(1) + Rat(2) * dimS(m2 + 2) + dimS(m1 + 2);
  } else if (m1 == 0) {
    v.q[3] = cnt(1) + Rat(2) * dimS(m2 + 3) + dimS(2 * m2 + 4);
  } else {
    v.q[3] = Rat(2) * dimS(m1 + m2 + 3) + dimS(m1 + 2 * m2 + 4);
    v.q[4] = dimS(m1 + 2);
  }
  return v;
}

DegreeVector boundary_dims(const HighestWeight& lambda) {
  const int64_t m1 = lambda.m1, m2 = lambda.m2;
  DegreeVector v;
  if (m1 % 2 != 0) return v;

  const auto& w = weyl_group();
  // Inner-cohomology dimensions of the Levi pieces: the GL1 x SL2 face
  // contributes holomorphic plus antiholomorphic forms of weight b+2, the
  // GL2 face holomorphic forms of weight a-b+2.
  auto d1 = [&](int wi) {
    return cnt(2 * dim_cusp_forms(dot_action(w[wi], lambda).b + 2));
  };
  auto d2 = [&](int wi) {
    const EpsPair p = dot_action(w[wi], lambda);
    return cnt(dim_cusp_forms(p.a - p.b + 2));
  };

  if (m1 == 0 && m2 == 0) {
    v.q[0] = cnt(1);
    v.q[2] = cnt(1) + d2(2);
    v.q[3] = cnt(1) + d2(4);
    v.q[5] = cnt(1);
  } else if (m1 == 0 && m2 % 2 == 0) {
    v.q[1] = d1(0);
    v.q[2] = d2(2);
    v.q[3] = d2(4);
    v.q[4] = d1(5);
  } else if (m2 == 0) {
    v.q[1] = d2(0);
    v.q[2] = d2(2) + cnt(1);
    v.q[3] = d2(4) + cnt(1);
    v.q[4] = d2(6);
  } else if (m2 % 2 == 0) {
    v.q[1] = cnt(1) + d1(0) + d2(0);
    v.q[2] = d2(2);
    v.q[3] = d2(4);
    v.q[4] = cnt(1) + d1(5) + d2(6);
  } else if (m1 == 0) {
    v.q[2] = cnt(1) + d1(1) + d2(2);
    v.q[3] = cnt(1) + d1(3) + d2(4);
  } else {
    v.q[1] = d2(0);
    v.q[2] = d1(1) + d2(2);
    v.q[3] = d1(3) + d2(4);
    v.q[4] = d2(6);
  }
  return v;
}

namespace {

// chi_Eis residue data, rows indexed by m2 mod 12, columns by
// (m1/2) mod 6. Even rows are constants; odd rows are -(2k1 + 4k2 + c).
const int kEisConstRow[6][6] = {
    {-2, -1, -1, -1, -2, 0},  // l2 = 0
    {0, 1, 0, 1, 0, 1},       // l2 = 2
    {-1, 1, 0, 0, 0, 1},      // l2 = 4
    {-1, 0, 0, 0, -1, 1},     // l2 = 6
    {-1, 0, -1, 0, -1, 0},    // l2 = 8
    {0, 2, 1, 1, 1, 2},       // l2 = 10
};
const int kEisAffineRow[6][6] = {
    {1, 0, 0, 1, 2, 0},  // l2 = 1
    {1, 1, 0, 3, 1, 2},  // l2 = 3
    {1, 1, 3, 1, 3, 3},  // l2 = 5
    {2, 3, 1, 4, 3, 3},  // l2 = 7
    {4, 2, 3, 4, 4, 3},  // l2 = 9
    {2, 4, 4, 4, 4, 6},  // l2 = 11
};
// m1 = 0 column: entries z + c at even m2 (z = 2 * #Z), -4k2 + c at odd m2.
const int kEisM1Zero[12] = {-2, -1, 0, -1, -1, -1, -1, -2, -1, -4, 0, -2};

// h_Eis + chi_Eis residue data, same indexing. Even rows: 2k1 + 4k2 + c;
// odd rows: 2k1 + c with c from the m2 = 0 vector.
const int kSumConstRow[6][6] = {
    {-4, -2, -2, -2, -2, 0},  // l2 = 0
    {0, 2, 2, 2, 2, 4},       // l2 = 2
    {0, 2, 2, 2, 2, 4},       // l2 = 4
    {0, 2, 2, 2, 2, 4},       // l2 = 6
    {0, 2, 2, 2, 2, 4},       // l2 = 8
    {4, 6, 6, 6, 6, 8},       // l2 = 10
};
const int kSumM2Zero[6] = {-2, 0, 0, 0, 0, 2};
// m1 = 0 column: z + 4k2 + c at even m2, 0 at odd m2.
const int kSumM1Zero[6] = {-4, 0, 0, 0, 0, 4};

}  // namespace

SymbolicCount chi_eis(const HighestWeight& lambda, const ZkMode& mode) {
  const int64_t m1 = lambda.m1, m2 = lambda.m2;
  if (m1 % 2 != 0) return SymbolicCount();
  if (m1 == 0 && m2 == 0) return cnt(2);
  const int64_t k1 = m1 / 12, l1 = m1 % 12;
  const int64_t k2 = m2 / 12, l2 = m2 % 12;
  if (m2 == 0) return cnt(kEisConstRow[0][l1 / 2]);
  if (m1 == 0) {
    SymbolicCount c = cnt(kEisM1Zero[l2]);
    if (l2 % 2 == 0) return Rat(2) * zk(m2, mode) + c;
    return cnt(-4 * k2) + c;
  }
  if (l2 % 2 == 0) return cnt(kEisConstRow[l2 / 2][l1 / 2]);
  return cnt(-(2 * k1 + 4 * k2 + kEisAffineRow[l2 / 2][l1 / 2]));
}

SymbolicCount chi_eis_from_degrees(const HighestWeight& lambda, const ZkMode& mode) {
  return h_eis_by_degree(lambda, mode).alternating_sum();
}

SymbolicCount eis_plus_chi_grid(const HighestWeight& lambda, const ZkMode& mode) {
  const int64_t m1 = lambda.m1, m2 = lambda.m2;
  if (m1 % 2 != 0) return SymbolicCount();
  // The (0,0) value is pinned by 2(h^0 + h^2 + h^4) = 4.
  if (m1 == 0 && m2 == 0) return cnt(4);
  const int64_t k1 = m1 / 12, l1 = m1 % 12;
  const int64_t k2 = m2 / 12, l2 = m2 % 12;
  if (m2 == 0) return cnt(2 * k1 + kSumM2Zero[l1 / 2]);
  if (m1 == 0) {
    if (l2 % 2 != 0) return SymbolicCount();
    return Rat(2) * zk(m2, mode) + cnt(4 * k2 + kSumM1Zero[l2 / 2]);
  }
  if (l2 % 2 == 0) return cnt(2 * k1 + 4 * k2 + kSumConstRow[l2 / 2][l1 / 2]);
  return cnt(2 * k1 + kSumM2Zero[l1 / 2]);
}

SymbolicCount h_cusp(const HighestWeight& lambda, const ZkMode& mode) {
  TraceOracle oracle;
  return h_cusp(lambda, mode, oracle);
}

SymbolicCount h_cusp(const HighestWeight& lambda, const ZkMode& mode,
                     TraceOracle& oracle) {
  SymbolicCount v = chi_eis(lambda, mode) - SymbolicCount(chi_h(lambda, oracle));
  if (v.resolved() && v.constant < 0)
    throw std::domain_error("h_cusp: negative resolved dimension " + v.str() +
                            " at m1=" + std::to_string(lambda.m1) +
                            " m2=" + std::to_string(lambda.m2));
  return v;
}

DegreeVector h_by_degree(const HighestWeight& lambda, const ZkMode& mode) {
  TraceOracle oracle;
  return h_by_degree(lambda, mode, oracle);
}

DegreeVector h_by_degree(const HighestWeight& lambda, const ZkMode& mode,
                         TraceOracle& oracle) {
  const int64_t m1 = lambda.m1, m2 = lambda.m2;
  DegreeVector v;
  if (m1 % 2 != 0) return v;

  SymbolicCount eis3;  // Eisenstein part of degree 3
  if (m1 == 0 && m2 == 0) {
    v.q[0] = cnt(1);
    v.q[2] = cnt(1);
  } else if (m1 == 0 && m2 % 2 == 0) {
    const SymbolicCount z = zk(m2, mode);
    v.q[2] = z;
    eis3 = dimS(2 * m2 + 4) - z;
    v.q[4] = Rat(2) * dimS(m2 + 2);
  } else if (m2 == 0) {
    eis3 = cnt(1) + dimS(m1 + 4);
    v.q[4] = dimS(m1 + 2);
  } else if (m2 % 2 == 0) {
    eis3 = dimS(m1 + 2 * m2 + 4);
    v.q[4] = cnt(1) + Rat(2) * dimS(m2 + 2) + dimS(m1 + 2);
  } else if (m1 == 0) {
    eis3 = cnt(1) + Rat(2) * dimS(m2 + 3) + dimS(2 * m2 + 4);
  } else {
    eis3 = Rat(2) * dimS(m1 + m2 + 3) + dimS(m1 + 2 * m2 + 4);
    v.q[4] = dimS(m1 + 2);
  }
  v.q[3] = h_cusp(lambda, mode, oracle) + eis3;
  return v;
}

SymbolicCount h_total(const HighestWeight& lambda, const ZkMode& mode) {
  TraceOracle oracle;
  return h_total(lambda, mode, oracle);
}

SymbolicCount h_total(const HighestWeight& lambda, const ZkMode& mode,
                      TraceOracle& oracle) {
  return h_by_degree(lambda, mode, oracle).total();
}

}  // namespace sp4
