#include "sp4/euler.hpp"

#include <stdexcept>

namespace sp4 {

Rat chi_h(const HighestWeight& lambda) {
  TraceOracle oracle;
  return chi_h(lambda, oracle);
}

Rat chi_h(const HighestWeight& lambda, TraceOracle& oracle) {
  Rat sum(0);
  for (const auto& t : torsion_classes())
    sum += t.centralizer_chi * Rat(oracle.weight_trace(t, lambda));
  sum.canonicalize();
  if (!is_integer(sum))
    throw std::logic_error("chi_h: non-integral torsion sum " + to_string(sum));
  return sum;
}

namespace {

// Coefficients (a, b, c) of (a*n1 + b*n2 + c)/432, row = m2 mod 12,
// col = (m1/2) mod 6.
const int kResidueGrid[12][6][3] = {
    {{-67, 8, 282}, {-49, -8, -370}, {-43, 0, -86}, {-49, 8, 174}, {-67, -8, -550}, {-25, 0, -50}},
    {{-32, -27, -91}, {-8, -13, -53}, {-8, 13, 21}, {-32, 27, -37}, {-8, -67, 325}, {-8, 67, -357}},
    {{9, -32, 274}, {27, 0, 54}, {9, 32, -238}, {27, -32, 22}, {9, 0, 18}, {27, 32, 86}},
    {{8, -31, -135}, {8, 31, 167}, {32, 9, 361}, {8, -49, -297}, {8, 49, 329}, {32, -9, -233}},
    {{-11, 0, -22}, {31, 8, -50}, {13, -8, -6}, {7, 0, 14}, {13, 8, 58}, {31, -8, 174}},
    {{0, -11, -11}, {0, 27, 27}, {0, -43, -43}, {0, 43, 43}, {0, -27, -27}, {0, 11, 11}},
    {{-31, 8, 66}, {-13, -8, -10}, {-7, 0, -14}, {-13, 8, -42}, {-31, -8, -190}, {11, 0, 22}},
    {{-32, 9, -343}, {-8, -49, 199}, {-8, 49, -231}, {-32, -9, 215}, {-8, -31, 73}, {-8, 31, -105}},
    {{-27, -32, -86}, {-9, 0, -18}, {-27, 32, -22}, {-9, -32, -338}, {-27, 0, -54}, {-9, 32, 302}},
    {{8, -67, -459}, {8, 67, 491}, {32, -27, 37}, {8, -13, 27}, {8, 13, 5}, {32, 27, 91}},
    {{25, 0, 50}, {67, 8, -266}, {49, -8, 354}, {43, 0, 86}, {49, 8, -158}, {67, -8, 534}},
    {{0, 25, 25}, {0, -9, -9}, {0, -7, -7}, {0, 7, 7}, {0, 9, 9}, {0, -25, -25}},
};

}  // namespace

Rat euler_residue_grid(int row, int col, int64_t n1, int64_t n2) {
  if (row < 0 || row >= 12 || col < 0 || col >= 6)
    throw std::out_of_range("euler_residue_grid: index");
  const int* e = kResidueGrid[row][col];
  Rat r(Int(e[0]) * n1 + Int(e[1]) * n2 + e[2], Int(432));
  r.canonicalize();
  return r;
}

Rat chi_h_closed(const HighestWeight& lambda) {
  if (lambda.m1 % 2 != 0) return Rat(0);
  const int64_t n1 = lambda.n1(), n2 = lambda.n2();
  Rat sum = family_chi(TraceFamily::A) * Rat(weyl_dimension(lambda));
  sum += family_chi(TraceFamily::BC) *
         trace_matrix_entry(TraceFamily::BC, int(n1 % 2), int(n2 % 2), n1, n2);
  sum += family_chi(TraceFamily::K) *
         trace_matrix_entry(TraceFamily::K, int(n1 % 5), int(n2 % 5), n1, n2);
  sum += family_chi(TraceFamily::N) *
         trace_matrix_entry(TraceFamily::N, int(n1 % 8), int(n2 % 8), n1, n2);
  sum += euler_residue_grid(int(lambda.m2 % 12), int((lambda.m1 / 2) % 6), n1, n2);
  sum.canonicalize();
  if (!is_integer(sum))
    throw std::logic_error("chi_h_closed: non-integral value " + to_string(sum));
  return sum;
}

namespace {

// (a_k, b_k) for k mod 30, as pairs of (num, den).
const long kSymCoeffs[30][4] = {
    {-2, 15, 3, 2},        {-11, 120, -437, 540}, {-7, 90, -41, 270},
    {-11, 120, -7, 20},    {-2, 15, -331, 270},   {-13, 360, 79, 108},
    {-2, 15, 7, 10},       {-11, 120, -437, 540}, {-7, 90, -257, 270},
    {-11, 120, 9, 20},     {-2, 15, -23, 54},     {-13, 360, -37, 540},
    {-2, 15, 7, 10},       {-11, 120, -869, 540}, {-7, 90, -41, 270},
    {-11, 120, 5, 4},      {-2, 15, -331, 270},   {-13, 360, -37, 540},
    {-2, 15, -1, 10},      {-11, 120, -437, 540}, {-7, 90, 35, 54},
    {-11, 120, 9, 20},     {-2, 15, -331, 270},   {-13, 360, -469, 540},
    {-2, 15, 7, 10},       {-11, 120, -1, 108},   {-7, 90, -41, 270},
    {-11, 120, 9, 20},     {-2, 15, -547, 270},   {-13, 360, -37, 540},
};

}  // namespace

Rat chi_h_sym(int64_t n) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("chi_h_sym: n must be a non-negative even integer");
  const int64_t k = n / 2;
  const auto& row = kSymCoeffs[k % 30];
  const Rat a = rat(row[0], row[1]);
  const Rat b = rat(row[2], row[3]);
  Rat c(0);
  if (k % 2 == 0) c = (k / 2 % 2 == 0) ? rat(1, 2) : rat(-1, 2);
  const Int nn(n);
  Rat v = Rat(-nn * nn * nn) / 4320 + Rat(-nn * nn) / 720 + a * Rat(nn) + b + c;
  v.canonicalize();
  if (!is_integer(v))
    throw std::logic_error("chi_h_sym: non-integral value " + to_string(v));
  return v;
}

}  // namespace sp4
