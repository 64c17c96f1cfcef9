#include "sp4/traces.hpp"

#include <stdexcept>

namespace sp4 {

const std::vector<Int>& TraceOracle::sym(const TorsionClass& t, size_t nmax) {
  auto& seq = seqs_[t.id - 1];
  auto& cp = recur_[t.id - 1];
  if (cp[4] == 0) {
    cp = char_poly(mat_inverse_torsion(t.matrix, t.order));
    seq.push_back(Int(1));
  }
  // h_n = e1 h_{n-1} - e2 h_{n-2} + e3 h_{n-3} - e4 h_{n-4} with
  // e1 = -c3, e2 = c2, e3 = -c1, e4 = c0.
  while (seq.size() <= nmax) {
    const size_t n = seq.size();
    auto h = [&](size_t back) { return back > n ? Int(0) : seq[n - back]; };
    seq.push_back(-cp[3] * h(1) - cp[2] * h(2) - cp[1] * h(3) - cp[0] * h(4));
  }
  return seq;
}

Int TraceOracle::weight_trace(const TorsionClass& t, const HighestWeight& lambda) {
  const int64_t n1 = lambda.n1(), n2 = lambda.n2();
  const auto& seq = sym(t, static_cast<size_t>(n1) + 1);
  auto h = [&](int64_t n) { return n < 0 ? Int(0) : seq[static_cast<size_t>(n)]; };
  return h(n1) * (h(n2) + h(n2 - 2)) - (h(n1 + 1) + h(n1 - 1)) * h(n2 - 1);
}

SymTraceSeq sym_trace_oracle(const TorsionClass& t, size_t nmax) {
  TraceOracle oracle;
  const auto& seq = oracle.sym(t, nmax);
  return {t.id, {seq.begin(), seq.begin() + static_cast<long>(nmax) + 1}};
}

Int weight_trace(const TorsionClass& t, const HighestWeight& lambda) {
  TraceOracle oracle;
  return oracle.weight_trace(t, lambda);
}

Int sym_trace_closed(const TorsionClass& t, int64_t n) {
  if (n < 0) throw std::invalid_argument("sym_trace_closed: n < 0");
  Int v;
  switch (t.family) {
    case TraceFamily::A:
      v = Int(n + 1) * Int(n + 2) * Int(n + 3) / 6;
      break;
    case TraceFamily::BC:
      v = (n % 2 == 0) ? Int(n / 2 + 1) : Int(0);
      break;
    case TraceFamily::DE:
      switch (n % 3) {
        case 0: v = (n + 3) / 3; break;
        case 1: v = -(2 * n + 4) / 3; break;
        default: v = (n + 1) / 3; break;
      }
      break;
    case TraceFamily::F:
      v = n / 3 + 1;  // (n+3)/3, (n+2)/3, (n+1)/3 by residue mod 3
      break;
    case TraceFamily::F2:
      switch (n % 6) {
        case 0: case 5: v = n + 1; break;
        case 1: case 4: v = n + 2; break;
        default: v = n + 3; break;
      }
      break;
    case TraceFamily::GHI:
      if (n % 4 == 0) v = (n + 2) / 2;
      else if (n % 4 == 2) v = -(n + 2) / 2;
      else v = 0;
      break;
    case TraceFamily::J:
      if (n % 2 == 0) v = (n + 2) / 2;
      else if (n % 4 == 1) v = (n + 3) / 2;
      else v = (n + 1) / 2;
      break;
    case TraceFamily::K:
      v = (n % 5 == 0) ? 1 : (n % 5 == 1 ? -1 : 0);
      break;
    case TraceFamily::LM:
      v = (n % 6 == 0) ? 1 : (n % 6 == 2 ? -1 : 0);
      break;
    case TraceFamily::M:
      switch (n % 12) {
        case 0: case 2: v = 1; break;
        case 6: case 8: v = -1; break;
        default: v = 0; break;
      }
      break;
    case TraceFamily::N:
      v = (n % 4 == 0) ? ((n / 4) % 2 == 0 ? 1 : -1) : 0;
      break;
    case TraceFamily::O:
      switch (n % 12) {
        case 0: case 6: case 7: v = 1; break;
        case 1: case 2: case 8: v = -1; break;
        case 3: v = 2; break;
        case 5: v = -2; break;
        default: v = 0; break;
      }
      break;
  }
  if (t.sign_m1 && n % 2 != 0) v = -v;
  return v;
}

Int weyl_dimension(const HighestWeight& lambda) {
  const Int p = lambda.n1() + 2, q = lambda.n2() + 1;
  return p * q * (p * p - q * q) / 6;
}

int trace_matrix_size(TraceFamily f) {
  switch (f) {
    case TraceFamily::A: return 0;
    case TraceFamily::BC: return 2;
    case TraceFamily::DE: return 3;
    case TraceFamily::F: return 3;
    case TraceFamily::F2: return 6;
    case TraceFamily::GHI: return 4;
    case TraceFamily::J: return 4;
    case TraceFamily::K: return 5;
    case TraceFamily::LM: return 6;
    case TraceFamily::M: return 12;
    case TraceFamily::N: return 8;
    case TraceFamily::O: return 12;
  }
  throw std::invalid_argument("trace_matrix_size: bad family");
}

namespace {

Rat affine(long num_n1, long num_n2, long num_c, long den, int64_t n1, int64_t n2) {
  Rat r(Int(num_n1) * n1 + Int(num_n2) * n2 + num_c, Int(den));
  r.canonicalize();
  return r;
}

Rat constant_entry(const int* table, int size, int row, int col) {
  Rat r(table[row * size + col]);
  return r;
}

}  // namespace

Rat trace_matrix_entry(TraceFamily f, int row, int col, int64_t n1, int64_t n2) {
  const int size = trace_matrix_size(f);
  if (size == 0) throw std::invalid_argument("trace_matrix_entry: family A has no matrix");
  if (row < 0 || row >= size || col < 0 || col >= size)
    throw std::out_of_range("trace_matrix_entry: index");

  auto a = [&](long cn1, long cn2, long cc, long den) {
    return affine(cn1, cn2, cc, den, n1, n2);
  };

  switch (f) {
    case TraceFamily::BC: {
      if (row == 0 && col == 0) return Rat(Int(n1 + 2) * Int(n2 + 1)) / 2;
      if (row == 1 && col == 1) return Rat(-Int(n1 + 2) * Int(n2 + 1)) / 2;
      return Rat(0);
    }
    case TraceFamily::DE: {
      static const long t[3][3][3] = {
          {{1, 1, 3}, {-1, 1, -1}, {0, -2, -2}},
          {{-2, 0, -4}, {2, 0, 4}, {0, 0, 0}},
          {{1, -1, 1}, {-1, -1, -3}, {0, 2, 2}}};
      return a(t[row][col][0], t[row][col][1], t[row][col][2], 3);
    }
    case TraceFamily::F: {
      static const long t[3][3][3] = {
          {{1, 1, 3}, {-1, 1, -1}, {0, 1, 1}},
          {{1, 0, 2}, {-1, 0, -2}, {0, 0, 0}},
          {{1, -1, 1}, {-1, -1, -3}, {0, -1, -1}}};
      return a(t[row][col][0], t[row][col][1], t[row][col][2], 3);
    }
    case TraceFamily::F2: {
      static const long t[6][6][3] = {
          {{1, -1, 1}, {1, -1, 1}, {0, -1, -1}, {-1, -1, -3}, {-1, -1, -3}, {0, -1, -1}},
          {{1, 0, 2}, {1, 0, 2}, {0, 0, 0}, {-1, 0, -2}, {-1, 0, -2}, {0, 0, 0}},
          {{1, 1, 3}, {1, 1, 3}, {0, 1, 1}, {-1, 1, -1}, {-1, 1, -1}, {0, 1, 1}},
          {{1, 1, 3}, {1, 1, 3}, {0, 1, 1}, {-1, 1, -1}, {-1, 1, -1}, {0, 1, 1}},
          {{1, 0, 2}, {1, 0, 2}, {0, 0, 0}, {-1, 0, -2}, {-1, 0, -2}, {0, 0, 0}},
          {{1, -1, 1}, {1, -1, 1}, {0, -1, -1}, {-1, -1, -3}, {-1, -1, -3}, {0, -1, -1}}};
      return a(t[row][col][0], t[row][col][1], t[row][col][2], 1);
    }
    case TraceFamily::GHI: {
      static const long t[4][4][3] = {
          {{1, 0, 2}, {0, 0, 0}, {-1, 0, -2}, {0, 0, 0}},
          {{0, 0, 0}, {0, 1, 1}, {0, 0, 0}, {0, -1, -1}},
          {{-1, 0, -2}, {0, 0, 0}, {1, 0, 2}, {0, 0, 0}},
          {{0, 0, 0}, {0, -1, -1}, {0, 0, 0}, {0, 1, 1}}};
      return a(t[row][col][0], t[row][col][1], t[row][col][2], 2);
    }
    case TraceFamily::J: {
      static const long t[4][4][3] = {
          {{1, 0, 2}, {0, 0, 0}, {-1, 0, -2}, {0, 0, 0}},
          {{1, 1, 3}, {0, 1, 1}, {-1, 1, -1}, {0, 1, 1}},
          {{1, 0, 2}, {0, 0, 0}, {-1, 0, -2}, {0, 0, 0}},
          {{1, -1, 1}, {0, -1, -1}, {-1, -1, -3}, {0, -1, -1}}};
      return a(t[row][col][0], t[row][col][1], t[row][col][2], 2);
    }
    case TraceFamily::K: {
      static const int t[25] = {1, 0, 0, -1, 0,   //
                                -1, 0, 0, 1, 0,   //
                                0, 1, -1, 0, 0,   //
                                0, 0, 0, 0, 0,    //
                                0, -1, 1, 0, 0};
      return constant_entry(t, 5, row, col);
    }
    case TraceFamily::LM: {
      static const int t[36] = {1, 0, 0, 0, -1, 0,   //
                                0, 0, 0, 0, 0, 0,    //
                                -1, 0, 0, 0, 1, 0,   //
                                0, 1, 0, -1, 0, 0,   //
                                0, 0, 0, 0, 0, 0,    //
                                0, -1, 0, 1, 0, 0};
      return constant_entry(t, 6, row, col);
    }
    case TraceFamily::N: {
      static const int t[64] = {1, 0, 1, 0, -1, 0, -1, 0,   //
                                0, -1, 0, 0, 0, 1, 0, 0,    //
                                0, 0, 0, 0, 0, 0, 0, 0,     //
                                0, 1, 0, 0, 0, -1, 0, 0,    //
                                -1, 0, -1, 0, 1, 0, 1, 0,   //
                                0, 1, 0, 0, 0, -1, 0, 0,    //
                                0, 0, 0, 0, 0, 0, 0, 0,     //
                                0, -1, 0, 0, 0, 1, 0, 0};
      return constant_entry(t, 8, row, col);
    }
    case TraceFamily::M: {
      static const int t[144] = {
          1, 0, 2, 0, 1, 0, -1, 0, -2, 0, -1, 0,      //
          0, -2, 0, -2, 0, 0, 0, 2, 0, 2, 0, 0,       //
          1, 0, 2, 0, 1, 0, -1, 0, -2, 0, -1, 0,      //
          0, -1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 0,       //
          0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,         //
          0, 1, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0,       //
          -1, 0, -2, 0, -1, 0, 1, 0, 2, 0, 1, 0,      //
          0, 2, 0, 2, 0, 0, 0, -2, 0, -2, 0, 0,       //
          -1, 0, -2, 0, -1, 0, 1, 0, 2, 0, 1, 0,      //
          0, 1, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0,       //
          0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,         //
          0, -1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 0};
      return constant_entry(t, 12, row, col);
    }
    case TraceFamily::O: {
      static const int t[144] = {
          1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0,      //
          -1, 1, 0, -1, 1, 0, -1, 1, 0, -1, 1, 0,     //
          -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0,      //
          2, -1, -1, 1, 0, 0, 0, -1, 1, 1, -2, 0,     //
          0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,         //
          -2, 1, 1, -1, 0, 0, 0, 1, -1, -1, 2, 0,     //
          1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0,      //
          1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1, 0,     //
          -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0,      //
          0, 1, -1, -1, 2, 0, -2, 1, 1, -1, 0, 0,     //
          0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,         //
          0, -1, 1, 1, -2, 0, 2, -1, -1, 1, 0, 0};
      return constant_entry(t, 12, row, col);
    }
    default:
      throw std::invalid_argument("trace_matrix_entry: bad family");
  }
}

Int weight_trace_closed(const TorsionClass& t, const HighestWeight& lambda) {
  const int64_t n1 = lambda.n1(), n2 = lambda.n2();
  Int v;
  if (t.family == TraceFamily::A) {
    v = weyl_dimension(lambda);
  } else {
    const int size = trace_matrix_size(t.family);
    const Rat entry = trace_matrix_entry(
        t.family, static_cast<int>(n1 % size), static_cast<int>(n2 % size), n1, n2);
    v = to_int(entry);
  }
  if (t.sign_m1 && lambda.m1 % 2 != 0) v = -v;
  return v;
}

}  // namespace sp4
