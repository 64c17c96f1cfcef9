#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sp4/traces.hpp"
#include "sp4/verify.hpp"

using namespace sp4;

TEST_CASE("oracle sequences for known classes") {
  CHECK(sym_trace_oracle(torsion_class(1), 3).values ==
        std::vector<Int>{1, 4, 10, 20});
  CHECK(sym_trace_oracle(torsion_class(3), 2).values == std::vector<Int>{1, 0, 2});
  CHECK(sym_trace_oracle(torsion_class(18), 6).values ==
        std::vector<Int>{1, -1, 0, 0, 0, 1, -1});
}

TEST_CASE("closed-form sym traces at sampled points") {
  CHECK(sym_trace_closed(torsion_class(5), 4) == -4);
  CHECK(sym_trace_closed(torsion_class(25), 5) == 6);
  CHECK(sym_trace_closed(torsion_class(39), 8) == 1);
  CHECK(sym_trace_closed(torsion_class(2), 3) == -20);  // (-1)^n dim Sym^3
  CHECK(sym_trace_closed(torsion_class(1), 0) == 1);
}

TEST_CASE("oracle equals closed form for n <= 80") {
  for (const auto& t : torsion_classes()) {
    const auto seq = sym_trace_oracle(t, 80);
    for (int64_t n = 0; n <= 80; ++n) {
      CAPTURE(t.id);
      CAPTURE(n);
      CHECK(sym_trace_closed(t, n) == seq.values[static_cast<size_t>(n)]);
    }
  }
}

TEST_CASE("weight traces via the product formula") {
  CHECK(weight_trace(torsion_class(1), weight(0, 0)) == 1);
  CHECK(weight_trace(torsion_class(1), weight(1, 1)) == 16);
  for (int64_t n1 = 0; n1 <= 30; ++n1)
    for (int64_t m2 = 0; m2 <= n1; ++m2) {
      const HighestWeight l = weight(n1 - m2, m2);
      CHECK(weight_trace(torsion_class(1), l) == weyl_dimension(l));
      CHECK(weight_trace(torsion_class(1), l) > 0);
    }
}

TEST_CASE("closed weight traces at sampled points") {
  CHECK(weight_trace_closed(torsion_class(2), weight(1, 0)) == -4);
  CHECK(weight_trace_closed(torsion_class(18), weight(0, 0)) == 1);

  // Both-even cell of the order-2 family.
  for (int64_t n1 : {2, 4, 10})
    for (int64_t n2 : {0, 2}) {
      const HighestWeight l = weight(n1 - n2, n2);
      CHECK(weight_trace_closed(torsion_class(3), l) ==
            to_int(Rat(Int(n1 + 2) * Int(n2 + 1)) / 2));
    }
}

TEST_CASE("sym specialization of the weight trace") {
  TraceOracle oracle;
  for (const auto& t : torsion_classes()) {
    const auto seq = sym_trace_oracle(t, 25);
    for (int64_t n = 0; n <= 25; ++n)
      CHECK(oracle.weight_trace(t, weight(n, 0)) == seq.values[static_cast<size_t>(n)]);
  }
}

TEST_CASE("oracle equals lookup matrices for n1 <= 24") {
  const CheckResult r = check_weight_trace_sweep(24);
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("conjugate classes share oracle sequences") {
  const CheckResult r = check_trace_conjugation_consistency(60);
  INFO(r.detail);
  CHECK(r.pass);
}

TEST_CASE("matrix sizes follow the displays") {
  CHECK(trace_matrix_size(TraceFamily::BC) == 2);
  CHECK(trace_matrix_size(TraceFamily::DE) == 3);
  CHECK(trace_matrix_size(TraceFamily::F) == 3);
  CHECK(trace_matrix_size(TraceFamily::F2) == 6);
  CHECK(trace_matrix_size(TraceFamily::GHI) == 4);
  CHECK(trace_matrix_size(TraceFamily::J) == 4);
  CHECK(trace_matrix_size(TraceFamily::K) == 5);
  CHECK(trace_matrix_size(TraceFamily::LM) == 6);
  CHECK(trace_matrix_size(TraceFamily::N) == 8);
  CHECK(trace_matrix_size(TraceFamily::M) == 12);
  CHECK(trace_matrix_size(TraceFamily::O) == 12);
}
