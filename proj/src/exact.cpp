#include "sp4/exact.hpp"

namespace sp4 {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_int(const Rat& q) {
  if (!is_integer(q))
    throw std::domain_error("to_int: not an integer: " + to_string(q));
  return q.get_num();
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Mat4 mat4(std::initializer_list<long> entries) {
  if (entries.size() != 16) throw std::invalid_argument("mat4: need 16 entries");
  Mat4 m;
  auto it = entries.begin();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Int(*it++);
  return m;
}

Mat2 mat2(std::initializer_list<long> entries) {
  if (entries.size() != 4) throw std::invalid_argument("mat2: need 4 entries");
  Mat2 m;
  auto it = entries.begin();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = Int(*it++);
  return m;
}

const Mat4& symplectic_form() {
  static const Mat4 j = mat4({0, 0, 1, 0,    //
                              0, 0, 0, 1,    //
                              -1, 0, 0, 0,   //
                              0, -1, 0, 0});
  return j;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) { return a * b; }

Mat4 mat_pow(const Mat4& m, unsigned e) {
  Mat4 acc = Mat4::Identity();
  for (unsigned i = 0; i < e; ++i) acc = acc * m;
  return acc;
}

namespace {

// Dense polynomial of degree <= 4 over Z, ascending coefficients.
struct Poly {
  std::array<Int, 5> c{};
};

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j + i < 5; ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

Poly det3(const std::array<std::array<Poly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::array<Int, 5> char_poly(const Mat4& m) {
  // Entries of x*id - m are degree <= 1; expand along the first row.
  std::array<std::array<Poly, 4>, 4> p;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      p[r][c].c[0] = -m(r, c);
      if (r == c) p[r][c].c[1] = 1;
    }
  Poly det;
  for (int c = 0; c < 4; ++c) {
    std::array<std::array<Poly, 3>, 3> minor;
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int k = 0; k < 4; ++k) {
        if (k == c) continue;
        minor[r - 1][cc++] = p[r][k];
      }
    }
    Poly term = p[0][c] * det3(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det.c;
}

bool is_symplectic(const Mat4& m) {
  const Mat4& j = symplectic_form();
  Mat4 lhs = m.transpose() * j * m;
  return lhs == j;
}

Mat4 mat_inverse_torsion(const Mat4& m, unsigned order) {
  if (order == 0) throw std::invalid_argument("mat_inverse_torsion: order 0");
  Mat4 inv = mat_pow(m, order - 1);
  if (Mat4(m * inv) != Mat4(Mat4::Identity()))
    throw std::invalid_argument("mat_inverse_torsion: m^order != id");
  return inv;
}

}  // namespace sp4
