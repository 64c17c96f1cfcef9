#include "sp4/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <tuple>

#include "sp4/cohomology.hpp"
#include "sp4/euler.hpp"
#include "sp4/fixtures.hpp"
#include "sp4/traces.hpp"

namespace sp4 {

namespace {

std::string at(const HighestWeight& l) {
  return "m1=" + std::to_string(l.m1) + " m2=" + std::to_string(l.m2);
}

CheckResult run(const std::string& name, const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  try {
    r.detail = body();  // empty or summary on success
    r.pass = true;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

// All weights with n1 <= cap, i.e. m1 + m2 <= cap.
std::vector<HighestWeight> weights_up_to(int64_t n1max) {
  std::vector<HighestWeight> out;
  for (int64_t m1 = 0; m1 <= n1max; ++m1)
    for (int64_t m2 = 0; m1 + m2 <= n1max; ++m2) out.push_back(weight(m1, m2));
  return out;
}

}  // namespace

CheckResult check_fixture_checksums() {
  return run("fixture checksums", [] {
    verify_fixture_checksums();
    return "manifest matches";
  });
}

CheckResult check_worked_examples() {
  return run("worked examples", [] {
    if (chi_h(weight(20, 19)) != -265) fail("chi_h(20,19) != -265");
    if (chi_h_closed(weight(20, 19)) != -265) fail("chi_h_closed(20,19) != -265");
    const SymbolicCount cusp = h_cusp(weight(18, 10), ZkMode::symbolic());
    if (!(cusp == SymbolicCount(50L))) fail("h_cusp(18,10) != 50: " + cusp.str());
    const SymbolicCount total = h_total(weight(18, 70), ZkMode::symbolic());
    if (!(total == SymbolicCount(4389L))) fail("h_total(18,70) != 4389: " + total.str());
    return "chi_h(20,19) = -265, h_cusp(18,10) = 50, h_total(18,70) = 4389";
  });
}

CheckResult check_euler_sym_table() {
  return run("euler_sym table (both routes)", [] {
    const auto table = load_euler_sym_table();
    TraceOracle oracle;
    for (size_t k = 0; k < table.size(); ++k) {
      const Rat expected(static_cast<long>(table[k]));
      const Rat by_sum = chi_h(weight(2 * static_cast<int64_t>(k), 0), oracle);
      if (by_sum != expected)
        fail("torsion sum at k=" + std::to_string(k) + ": " + to_string(by_sum) +
             " vs table " + to_string(expected));
      const Rat by_formula = chi_h_sym(2 * static_cast<int64_t>(k));
      if (by_formula != expected)
        fail("cubic formula at k=" + std::to_string(k) + ": " +
             to_string(by_formula) + " vs table " + to_string(expected));
    }
    return "150 values, torsion sum and cubic formula";
  });
}

CheckResult check_euler_weight_table() {
  return run("euler_weight table (both routes)", [] {
    const WeightGrid g = load_euler_weight_table();
    TraceOracle oracle;
    for (size_t i = 0; i < g.m1.size(); ++i)
      for (size_t j = 0; j < g.m2.size(); ++j) {
        const HighestWeight l = weight(g.m1[i], g.m2[j]);
        const Rat expected = g.values[i][j].constant;
        if (chi_h(l, oracle) != expected)
          fail("torsion sum at " + at(l) + ": " + to_string(chi_h(l, oracle)) +
               " vs table " + to_string(expected));
        if (chi_h_closed(l) != expected)
          fail("closed form at " + at(l) + ": " + to_string(chi_h_closed(l)) +
               " vs table " + to_string(expected));
      }
    return std::to_string(g.m1.size() * g.m2.size()) + " cells, both routes";
  });
}

namespace {

CheckResult check_grid_against(
    const std::string& name, const WeightGrid& g,
    const std::function<SymbolicCount(const HighestWeight&)>& f) {
  return run(name, [&] {
    for (size_t i = 0; i < g.m1.size(); ++i)
      for (size_t j = 0; j < g.m2.size(); ++j) {
        const HighestWeight l = weight(g.m1[i], g.m2[j]);
        const SymbolicCount got = f(l);
        if (!(got == g.values[i][j]))
          fail("at " + at(l) + ": " + got.str() + " vs table " +
               g.values[i][j].str());
      }
    return std::to_string(g.m1.size() * g.m2.size()) +
           " cells, compared as affine forms in zeta";
  });
}

}  // namespace

CheckResult check_cuspidal_table() {
  TraceOracle oracle;
  return check_grid_against(
      "cuspidal table", load_cuspidal_table(),
      [&](const HighestWeight& l) { return h_cusp(l, ZkMode::symbolic(), oracle); });
}

CheckResult check_h_total_table() {
  TraceOracle oracle;
  return check_grid_against(
      "h_total table", load_h_total_table(),
      [&](const HighestWeight& l) { return h_total(l, ZkMode::symbolic(), oracle); });
}

CheckResult check_sym_trace_sweep(int64_t nmax) {
  return run("sym trace sweep (oracle vs closed form, n <= " + std::to_string(nmax) + ")", [=] {
    for (const auto& t : torsion_classes()) {
      const SymTraceSeq seq = sym_trace_oracle(t, static_cast<size_t>(nmax));
      for (int64_t n = 0; n <= nmax; ++n)
        if (sym_trace_closed(t, n) != seq.values[static_cast<size_t>(n)])
          fail("class " + std::to_string(t.id) + " at n=" + std::to_string(n) +
               ": closed " + sym_trace_closed(t, n).get_str() + " vs oracle " +
               seq.values[static_cast<size_t>(n)].get_str());
    }
    return "56 classes";
  });
}

CheckResult check_weight_trace_sweep(int64_t n1max) {
  return run("weight trace sweep (oracle vs matrices, n1 <= " + std::to_string(n1max) + ")", [=] {
    TraceOracle oracle;
    for (const auto& l : weights_up_to(n1max)) {
      for (const auto& t : torsion_classes()) {
        const Int by_oracle = oracle.weight_trace(t, l);
        const Int by_matrix = weight_trace_closed(t, l);
        if (by_oracle != by_matrix) {
          const int size = trace_matrix_size(t.family);
          std::ostringstream cell;
          if (size > 0)
            cell << " (matrix " << to_string(t.family) << " cell row "
                 << l.n1() % size << ", col " << l.n2() % size << ")";
          fail("class " + std::to_string(t.id) + " at " + at(l) + ": matrix " +
               by_matrix.get_str() + " vs oracle " + by_oracle.get_str() +
               cell.str());
        }
      }
      // The dimension route must stay positive and match the product formula.
      const Int dim = oracle.weight_trace(torsion_class(1), l);
      if (dim <= 0) fail("non-positive dimension at " + at(l));
      if (dim != weyl_dimension(l)) fail("dimension mismatch at " + at(l));
    }
    return "56 classes x " + std::to_string(weights_up_to(n1max).size()) + " weights";
  });
}

CheckResult check_trace_conjugation_consistency(int64_t nmax) {
  return run("trace conjugation consistency", [=] {
    const std::vector<std::vector<int>> groups = {
        {3, 4}, {5, 6, 7}, {8, 9}, {10, 11, 12, 13}, {14, 15}, {16, 17},
        {18, 19, 20, 21}, {22, 23, 24}, {25, 26}, {27, 28}, {29, 30},
        {31, 32, 33, 34, 35, 36, 37, 38}, {39, 40, 41, 42}, {43, 44, 45, 46},
        {47, 48}, {49, 50, 51, 52}, {53, 54, 55, 56}};
    for (const auto& group : groups) {
      const auto ref = sym_trace_oracle(torsion_class(group[0]), static_cast<size_t>(nmax));
      for (size_t i = 1; i < group.size(); ++i) {
        const auto seq = sym_trace_oracle(torsion_class(group[i]), static_cast<size_t>(nmax));
        if (seq.values != ref.values)
          fail("classes " + std::to_string(group[0]) + " and " +
               std::to_string(group[i]) + " disagree");
      }
    }
    return std::to_string(groups.size()) + " diagonalization groups";
  });
}

CheckResult check_torsion_structure() {
  return run("torsion structure", [] {
    const auto& all = torsion_classes();
    if (all.size() != 56) fail("expected 56 classes");
    for (const auto& t : all) {
      if (!is_symplectic(t.matrix))
        fail("class " + std::to_string(t.id) + " not symplectic");
      if (order_of(t.matrix) != t.order)
        fail("class " + std::to_string(t.id) + " order mismatch");
      if (char_poly(t.matrix) != charpoly_of_label(t.charpoly_label))
        fail("class " + std::to_string(t.id) + " charpoly mismatch");
      const Mat4 inv = mat_inverse_torsion(t.matrix, t.order);
      if (Mat4(inv * t.matrix) != Mat4(Mat4::Identity()))
        fail("class " + std::to_string(t.id) + " inverse mismatch");
    }

    // Centralizer chi values against the fixture.
    for (const auto& row : load_centralizer_chi_table())
      for (int id : row.class_ids) {
        const auto& t = torsion_class(id);
        if (std::string(1, t.case_label) != row.case_label)
          fail("class " + std::to_string(id) + " case letter vs fixture");
        if (t.centralizer_chi != row.chi)
          fail("class " + std::to_string(id) + " chi " +
               to_string(t.centralizer_chi) + " vs fixture " + to_string(row.chi));
      }

    // Family sums reproduce the grouped coefficients.
    for (TraceFamily f : {TraceFamily::A, TraceFamily::BC, TraceFamily::DE,
                          TraceFamily::F, TraceFamily::F2, TraceFamily::GHI,
                          TraceFamily::J, TraceFamily::K, TraceFamily::LM,
                          TraceFamily::M, TraceFamily::N, TraceFamily::O}) {
      Rat sum(0);
      for (const auto& t : all)
        if (t.family == f) sum += t.centralizer_chi;
      sum.canonicalize();
      if (sum != family_chi(f))
        fail("family " + to_string(f) + " sum " + to_string(sum) + " vs " +
             to_string(family_chi(f)));
    }

    // Transpose / negation relations between representatives.
    auto m = [&](int id) { return torsion_class(id).matrix; };
    const std::vector<std::pair<int, int>> rel = {
        {9, 8}, {6, 5}, {15, 14}, {26, 25}, {34, 31}, {33, 32}, {52, 49}, {51, 50}};
    for (auto [a, b] : rel)
      if (m(a) != Mat4(m(b).transpose()))
        fail("T" + std::to_string(a) + " != T" + std::to_string(b) + "^t");
    const std::vector<std::pair<int, int>> neg = {
        {22, 5}, {23, 6}, {24, 7}, {27, 8}, {28, 9}, {11, 10}, {17, 14},
        {16, 15}, {43, 18}, {44, 19}, {45, 20}, {46, 21}, {29, 25}, {30, 26},
        {38, 37}, {42, 41}, {55, 49}, {56, 50}, {53, 51}, {54, 52}, {2, 1}};
    for (auto [a, b] : neg)
      if (m(a) != Mat4(-m(b)))
        fail("T" + std::to_string(a) + " != -T" + std::to_string(b));
    return "orders, charpolys, chi fixture, 12 family sums, relations";
  });
}

CheckResult check_finite_centralizer_orders() {
  return run("finite centralizer orders (bounded search)", [] {
    // Solve g*T = T*g as a linear system over Q, then enumerate integer
    // points of the solution space with free coordinates in [-3, 3] and
    // count the symplectic ones.
    auto centralizer_order = [](const Mat4& t) -> int64_t {
      // 16x16 system: (T g - g T) = 0, unknowns g(r,c) flattened row-major.
      std::array<std::array<Rat, 16>, 16> a{};
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          const int eq = 4 * r + c;
          for (int k = 0; k < 4; ++k) {
            a[eq][4 * k + c] += Rat(t(r, k));
            a[eq][4 * r + k] -= Rat(t(k, c));
          }
        }
      // Fraction-free enough: plain rational RREF.
      std::vector<int> pivot_col;
      int row = 0;
      for (int col = 0; col < 16 && row < 16; ++col) {
        int p = -1;
        for (int r = row; r < 16; ++r)
          if (a[r][col] != 0) { p = r; break; }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        const Rat lead = a[row][col];
        for (int c = 0; c < 16; ++c) a[row][c] /= lead;
        for (int r = 0; r < 16; ++r)
          if (r != row && a[r][col] != 0) {
            const Rat f = a[r][col];
            for (int c = 0; c < 16; ++c) a[r][c] -= f * a[row][c];
          }
        pivot_col.push_back(col);
        ++row;
      }
      std::vector<int> free_col;
      for (int c = 0; c < 16; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
          free_col.push_back(c);
      if (free_col.size() > 5) throw std::runtime_error("centralizer space too big");

      int64_t count = 0;
      std::vector<int> v(free_col.size(), -3);
      while (true) {
        std::array<Rat, 16> g{};
        for (size_t i = 0; i < free_col.size(); ++i) g[free_col[i]] = v[i];
        for (size_t r = 0; r < pivot_col.size(); ++r) {
          Rat val(0);
          for (size_t i = 0; i < free_col.size(); ++i)
            val -= a[r][free_col[i]] * Rat(v[i]);
          g[pivot_col[r]] = val;
        }
        bool integral = true;
        for (const auto& x : g)
          if (x.get_den() != 1) { integral = false; break; }
        if (integral) {
          Mat4 gm;
          for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) gm(r, c) = g[4 * r + c].get_num();
          if (is_symplectic(gm)) ++count;
        }
        size_t i = 0;
        for (; i < v.size(); ++i) {
          if (v[i] < 3) { ++v[i]; break; }
          v[i] = -3;
        }
        if (i == v.size()) break;
        if (v.empty()) break;
      }
      return count;
    };

    const std::vector<std::pair<int, int64_t>> expect = {
        {18, 10}, {31, 36}, {35, 12}, {39, 8}, {41, 8}, {47, 12}, {49, 24}};
    for (auto [id, n] : expect) {
      const int64_t got = centralizer_order(torsion_class(id).matrix);
      if (got != n)
        fail("centralizer of T" + std::to_string(id) + ": " +
             std::to_string(got) + " elements, expected " + std::to_string(n));
      const Rat chi = torsion_class(id).centralizer_chi;
      if (chi != rat(1, n))
        fail("chi of T" + std::to_string(id) + " vs 1/" + std::to_string(n));
    }
    return "7 finite centralizers enumerated";
  });
}

CheckResult check_chi_vanishes_for_odd_m1(int64_t n1max) {
  return run("chi_h vanishes for odd m1 (actual summation)", [=] {
    TraceOracle oracle;
    int64_t count = 0;
    for (const auto& l : weights_up_to(n1max)) {
      if (l.m1 % 2 == 0) continue;
      if (chi_h(l, oracle) != 0) fail("nonzero at " + at(l));
      ++count;
    }
    return std::to_string(count) + " odd-m1 weights";
  });
}

CheckResult check_eis_alternating_sum(int64_t n1max) {
  return run("chi_Eis grid vs alternating degree sum", [=] {
    for (const auto& l : weights_up_to(n1max)) {
      const SymbolicCount a = chi_eis(l, ZkMode::symbolic());
      const SymbolicCount b = chi_eis_from_degrees(l, ZkMode::symbolic());
      if (!(a == b)) fail("at " + at(l) + ": grid " + a.str() + " vs sum " + b.str());
    }
    return "affine forms over n1 <= " + std::to_string(n1max);
  });
}

CheckResult check_euler_degree_identity(int64_t n1max) {
  return run("alternating sum of h^q equals chi_h", [=] {
    TraceOracle oracle;
    for (const auto& l : weights_up_to(n1max)) {
      const SymbolicCount sum =
          h_by_degree(l, ZkMode::symbolic(), oracle).alternating_sum();
      if (!sum.resolved()) fail("zeta fails to cancel at " + at(l));
      if (sum.constant != chi_h(l, oracle))
        fail("at " + at(l) + ": " + sum.str() + " vs chi_h " +
             to_string(chi_h(l, oracle)));
    }
    return "zeta-terms cancel, values match, n1 <= " + std::to_string(n1max);
  });
}

CheckResult check_eis_plus_chi_identity(int64_t n1max) {
  return run("h_Eis + chi_Eis grid equals 2(h0 + h2 + h4)", [=] {
    TraceOracle oracle;
    for (const auto& l : weights_up_to(n1max)) {
      const DegreeVector h = h_by_degree(l, ZkMode::symbolic(), oracle);
      const SymbolicCount lhs = eis_plus_chi_grid(l, ZkMode::symbolic());
      const SymbolicCount rhs = Rat(2) * (h.q[0] + h.q[2] + h.q[4]);
      if (!(lhs == rhs))
        fail("at " + at(l) + ": grid " + lhs.str() + " vs 2(h0+h2+h4) " + rhs.str());
      const SymbolicCount eis_route =
          h_eis_by_degree(l, ZkMode::symbolic()).total() + chi_eis(l, ZkMode::symbolic());
      if (!(lhs == eis_route))
        fail("at " + at(l) + ": grid " + lhs.str() + " vs h_Eis + chi_Eis " +
             eis_route.str());
    }
    return "both routes, n1 <= " + std::to_string(n1max);
  });
}

CheckResult check_nonnegativity_under_assumption(int64_t n1max) {
  return run("non-negativity under assumed L-value nonvanishing", [=] {
    TraceOracle oracle;
    const ZkMode mode = ZkMode::assume();
    for (const auto& l : weights_up_to(n1max)) {
      const DegreeVector h = h_by_degree(l, mode, oracle);
      for (int q = 0; q < 6; ++q) {
        if (!h.q[q].resolved()) fail("unresolved dimension at " + at(l));
        if (h.q[q].constant < 0)
          fail("negative h^" + std::to_string(q) + " at " + at(l));
      }
    }
    return "all degrees resolved and >= 0, n1 <= " + std::to_string(n1max);
  });
}

CheckResult check_boundary_eis_compatibility(int64_t n1max) {
  return run("Eisenstein matches boundary in degrees 3, 4 (odd m2)", [=] {
    int64_t count = 0;
    for (const auto& l : weights_up_to(n1max)) {
      if (l.m1 % 2 != 0 || l.m2 % 2 == 0) continue;
      const DegreeVector eis = h_eis_by_degree(l, ZkMode::symbolic());
      const DegreeVector bd = boundary_dims(l);
      if (!(eis.q[3] == bd.q[3]) || !(eis.q[4] == bd.q[4]))
        fail("at " + at(l) + ": eis (" + eis.q[3].str() + ", " + eis.q[4].str() +
             ") vs boundary (" + bd.q[3].str() + ", " + bd.q[4].str() + ")");
      ++count;
    }
    return std::to_string(count) + " odd-m2 weights";
  });
}

CheckResult check_weyl_rows(int random_samples) {
  return run("Weyl rows and Kostant sets", [=] {
    const auto rows = load_weyl_table();
    const auto& group = weyl_group();
    if (rows.size() != 8) fail("expected 8 rows");
    for (int i = 0; i < 8; ++i) {
      if (rows[i].label != group[i].label()) fail("row label mismatch at " + std::to_string(i));
      if (rows[i].length != group[i].length) fail("length mismatch at w" + std::to_string(i));
      if (rows[i].word.size() != group[i].word.size())
        fail("word mismatch at w" + std::to_string(i));
    }
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int64_t> pick(0, 40);
    for (int s = 0; s < random_samples; ++s) {
      const int64_t n1 = pick(rng);
      std::uniform_int_distribution<int64_t> pick2(0, n1);
      const int64_t m2 = pick2(rng);
      const HighestWeight l = weight(n1 - m2, m2);
      for (int i = 0; i < 8; ++i) {
        const EpsPair got = dot_action(group[i], l);
        const EpsPair fixture{rows[i].a_m1 * l.m1 + rows[i].a_m2 * l.m2 + rows[i].a_c,
                              rows[i].b_m1 * l.m1 + rows[i].b_m2 * l.m2 + rows[i].b_c};
        if (!(got == fixture))
          fail("dot action w" + std::to_string(i) + " at " + at(l));
        if (!(got == dot_action_closed(group[i], l)))
          fail("closed form w" + std::to_string(i) + " at " + at(l));
      }
    }
    auto labels = [](const std::vector<WeylElement>& v) {
      std::string s;
      for (const auto& w : v) s += w.label() + " ";
      return s;
    };
    if (labels(kostant_representatives(Parabolic::P1)) != "w0 w1 w3 w5 ")
      fail("Kostant set for P1");
    if (labels(kostant_representatives(Parabolic::P2)) != "w0 w2 w4 w6 ")
      fail("Kostant set for P2");
    if (kostant_representatives(Parabolic::P0).size() != 8) fail("Kostant set for P0");
    return std::to_string(random_samples) + " random weights, 8 rows each";
  });
}

std::vector<CheckResult> run_verification() {
  return {
      check_fixture_checksums(),
      check_weyl_rows(),
      check_torsion_structure(),
      check_finite_centralizer_orders(),
      check_sym_trace_sweep(),
      check_weight_trace_sweep(),
      check_trace_conjugation_consistency(),
      check_worked_examples(),
      check_euler_sym_table(),
      check_euler_weight_table(),
      check_cuspidal_table(),
      check_h_total_table(),
      check_chi_vanishes_for_odd_m1(),
      check_eis_alternating_sum(),
      check_euler_degree_identity(),
      check_eis_plus_chi_identity(),
      check_nonnegativity_under_assumption(),
      check_boundary_eis_compatibility(),
  };
}

}  // namespace sp4
