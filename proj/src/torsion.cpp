#include "sp4/torsion.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sp4 {

Mat4 star(const Mat2& l, const Mat2& r) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = l(0, 0); m(0, 2) = l(0, 1);
  m(2, 0) = l(1, 0); m(2, 2) = l(1, 1);
  m(1, 1) = r(0, 0); m(1, 3) = r(0, 1);
  m(3, 1) = r(1, 0); m(3, 3) = r(1, 1);
  return m;
}

Mat4 dotplus(const Mat2& l, const Mat2& r) {
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = l;
  m.block<2, 2>(2, 2) = r;
  return m;
}

Mat4 circ(const Mat2& l, const Mat2& r) {
  Mat4 m = Mat4::Zero();
  m(0, 1) = l(0, 0); m(0, 3) = l(0, 1);
  m(2, 1) = l(1, 0); m(2, 3) = l(1, 1);
  m(1, 0) = r(0, 0); m(1, 2) = r(0, 1);
  m(3, 0) = r(1, 0); m(3, 2) = r(1, 1);
  return m;
}

Mat4 block_product(const BlockOp& op) {
  switch (op.kind) {
    case BlockKind::star: return star(op.left, op.right);
    case BlockKind::dotplus: return dotplus(op.left, op.right);
    case BlockKind::circ: return circ(op.left, op.right);
  }
  throw std::invalid_argument("block_product: bad kind");
}

std::string to_string(TraceFamily f) {
  switch (f) {
    case TraceFamily::A: return "A";
    case TraceFamily::BC: return "B,C";
    case TraceFamily::DE: return "D,E";
    case TraceFamily::F: return "F";
    case TraceFamily::F2: return "F2";
    case TraceFamily::GHI: return "G,H,I";
    case TraceFamily::J: return "J";
    case TraceFamily::K: return "K";
    case TraceFamily::LM: return "L,M";
    case TraceFamily::M: return "M";
    case TraceFamily::N: return "N";
    case TraceFamily::O: return "O";
  }
  return "?";
}

Rat family_chi(TraceFamily f) {
  switch (f) {
    case TraceFamily::A: return rat(-1, 720);
    case TraceFamily::BC: return rat(7, 144);
    case TraceFamily::DE: return rat(-1, 18);
    case TraceFamily::F: return rat(-1, 18);
    case TraceFamily::F2: return rat(-1, 18);
    case TraceFamily::GHI: return rat(-1, 24);
    case TraceFamily::J: return rat(-1, 12);
    case TraceFamily::K: return rat(4, 5);
    case TraceFamily::LM: return rat(4, 9);
    case TraceFamily::M: return rat(1, 6);
    case TraceFamily::N: return rat(1, 2);
    case TraceFamily::O: return rat(1, 3);
  }
  throw std::invalid_argument("family_chi: bad family");
}

unsigned order_of(const Mat4& m, unsigned cap) {
  Mat4 acc = m;
  for (unsigned k = 1; k <= cap; ++k) {
    if (acc == Mat4(Mat4::Identity())) return k;
    acc = acc * m;
  }
  throw std::domain_error("order_of: no order <= cap");
}

namespace {

// Cyclotomic polynomials of the orders occurring among degree-4 symplectic
// torsion elements, ascending coefficients padded to degree 4.
const std::map<std::string, std::vector<long>>& cyclotomics() {
  static const std::map<std::string, std::vector<long>> t = {
      {"Phi1", {-1, 1}},
      {"Phi2", {1, 1}},
      {"Phi3", {1, 1, 1}},
      {"Phi4", {1, 0, 1}},
      {"Phi5", {1, 1, 1, 1, 1}},
      {"Phi6", {1, -1, 1}},
      {"Phi8", {1, 0, 0, 0, 1}},
      {"Phi10", {1, -1, 1, -1, 1}},
      {"Phi12", {1, 0, -1, 0, 1}},
  };
  return t;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<long>& b) {
  std::vector<Int> r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

std::array<Int, 5> charpoly_of_label(const std::string& label) {
  std::vector<Int> acc = {Int(1)};
  std::stringstream ss(label);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    std::string base = factor;
    int exp = 1;
    if (auto pos = factor.find('^'); pos != std::string::npos) {
      base = factor.substr(0, pos);
      exp = std::stoi(factor.substr(pos + 1));
    }
    auto it = cyclotomics().find(base);
    if (it == cyclotomics().end())
      throw std::invalid_argument("charpoly_of_label: unknown factor " + base);
    for (int e = 0; e < exp; ++e) acc = poly_mul(acc, it->second);
  }
  if (acc.size() != 5)
    throw std::invalid_argument("charpoly_of_label: degree != 4 in " + label);
  std::array<Int, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = acc[i];
  return out;
}

namespace {

struct ClassSpec {
  int id;
  Mat4 matrix;
  std::string charpoly;
  char case_label;
  TraceFamily family;
  bool sign_m1;
};

unsigned order_of_label(const std::string& label) {
  // lcm of the root-of-unity orders of the cyclotomic factors.
  static const std::map<std::string, unsigned> ord = {
      {"Phi1", 1}, {"Phi2", 2},  {"Phi3", 3},  {"Phi4", 4},  {"Phi5", 5},
      {"Phi6", 6}, {"Phi8", 8},  {"Phi10", 10}, {"Phi12", 12}};
  unsigned l = 1;
  std::stringstream ss(label);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    std::string base = factor.substr(0, factor.find('^'));
    unsigned o = ord.at(base);
    l = std::lcm(l, o);
  }
  return l;
}

Rat case_chi(char c) {
  switch (c) {
    case 'A': return rat(-1, 1440);
    case 'B': return rat(1, 144);
    case 'C': return rat(6, 144);
    case 'D': return rat(1, 72);
    case 'E': return rat(-1, 18);
    case 'F': return rat(-1, 72);
    case 'G': return rat(1, 32);
    case 'H': return rat(-1, 16);
    case 'I': return rat(-1, 24);
    case 'J': return rat(-1, 48);
    case 'K': return rat(1, 10);
    case 'L': return rat(1, 36);
    case 'M': return rat(1, 12);
    case 'N': return rat(1, 8);
    case 'O': return rat(1, 24);
  }
  throw std::invalid_argument("case_chi: bad case");
}

std::vector<TorsionClass> build_all() {
  const Mat2 id2 = mat2({1, 0, 0, 1});
  const Mat2 u = mat2({1, 0, 1, -1});
  const Mat2 w = mat2({0, -1, 1, -1});
  const Mat2 j2 = mat2({0, -1, 1, 0});
  const Mat2 wt = w.transpose();
  const Mat2 j2t = j2.transpose();

  const Mat4 big_r = mat4({0, 0, -1, 0,   //
                           0, 0, 0, -1,   //
                           1, 0, 0, 1,    //
                           0, 1, 1, 0});
  const Mat4 big_s = mat4({0, 1, 0, 0,    //
                           0, 0, -1, 0,   //
                           0, 0, -1, 1,   //
                           1, 1, -1, 0});
  const Mat4 big_t = mat4({0, -1, 1, 0,   //
                           -1, 0, 1, 1,   //
                           -1, 1, 0, 0,   //
                           0, -1, 0, 0});

  using TF = TraceFamily;
  std::vector<ClassSpec> specs = {
      {1, Mat4::Identity(), "Phi1^4", 'A', TF::A, false},
      {2, -Mat4::Identity(), "Phi2^4", 'A', TF::A, true},
      {3, star(id2, -id2), "Phi1^2*Phi2^2", 'B', TF::BC, false},
      {4, dotplus(u, u.transpose()), "Phi1^2*Phi2^2", 'C', TF::BC, false},
      {5, star(w, w), "Phi3^2", 'D', TF::DE, false},
      {6, star(wt, wt), "Phi3^2", 'D', TF::DE, false},
      {7, star(w, wt), "Phi3^2", 'E', TF::DE, false},
      {8, star(id2, w), "Phi1^2*Phi3", 'F', TF::F, false},
      {9, star(id2, wt), "Phi1^2*Phi3", 'F', TF::F, false},
      {10, star(j2, j2), "Phi4^2", 'G', TF::GHI, false},
      {11, -star(j2, j2), "Phi4^2", 'G', TF::GHI, false},
      {12, star(j2, -j2), "Phi4^2", 'H', TF::GHI, false},
      {13, circ(-id2, id2), "Phi4^2", 'I', TF::GHI, false},
      {14, star(id2, j2), "Phi1^2*Phi4", 'J', TF::J, false},
      {15, star(id2, -j2), "Phi1^2*Phi4", 'J', TF::J, false},
      {16, star(-id2, j2), "Phi2^2*Phi4", 'J', TF::J, true},
      {17, -star(id2, j2), "Phi2^2*Phi4", 'J', TF::J, true},
      {18, big_s, "Phi5", 'K', TF::K, false},
      {19, mat_pow(big_s, 2), "Phi5", 'K', TF::K, false},
      {20, mat_pow(big_s, 3), "Phi5", 'K', TF::K, false},
      {21, mat_pow(big_s, 4), "Phi5", 'K', TF::K, false},
      {22, -star(w, w), "Phi6^2", 'D', TF::DE, true},
      {23, -star(wt, wt), "Phi6^2", 'D', TF::DE, true},
      {24, -star(w, wt), "Phi6^2", 'E', TF::DE, true},
      {25, star(id2, -w), "Phi1^2*Phi6", 'F', TF::F2, false},
      {26, star(id2, -wt), "Phi1^2*Phi6", 'F', TF::F2, false},
      {27, -star(id2, w), "Phi2^2*Phi6", 'F', TF::F, true},
      {28, -star(id2, wt), "Phi2^2*Phi6", 'F', TF::F, true},
      {29, star(-id2, w), "Phi2^2*Phi3", 'F', TF::F2, true},
      {30, star(-id2, wt), "Phi2^2*Phi3", 'F', TF::F2, true},
      {31, star(w, -w), "Phi3*Phi6", 'L', TF::LM, false},
      {32, star(w, -wt), "Phi3*Phi6", 'L', TF::LM, false},
      {33, star(wt, -w), "Phi3*Phi6", 'L', TF::LM, false},
      {34, star(wt, -wt), "Phi3*Phi6", 'L', TF::LM, false},
      {35, circ(id2, w), "Phi3*Phi6", 'M', TF::LM, false},
      {36, circ(id2, wt), "Phi3*Phi6", 'M', TF::LM, false},
      {37, big_r, "Phi3*Phi6", 'M', TF::LM, false},
      {38, -big_r, "Phi3*Phi6", 'M', TF::LM, false},
      {39, circ(id2, j2), "Phi8", 'N', TF::N, false},
      {40, circ(id2, -j2), "Phi8", 'N', TF::N, false},
      {41, big_t, "Phi8", 'N', TF::N, false},
      {42, -big_t, "Phi8", 'N', TF::N, false},
      {43, -big_s, "Phi10", 'K', TF::K, true},
      {44, -mat_pow(big_s, 2), "Phi10", 'K', TF::K, true},
      {45, -mat_pow(big_s, 3), "Phi10", 'K', TF::K, true},
      {46, -mat_pow(big_s, 4), "Phi10", 'K', TF::K, true},
      {47, circ(id2, -w), "Phi12", 'M', TF::M, false},
      {48, circ(id2, -wt), "Phi12", 'M', TF::M, false},
      {49, star(j2, w), "Phi3*Phi4", 'O', TF::O, false},
      {50, star(j2, wt), "Phi3*Phi4", 'O', TF::O, false},
      {51, star(j2t, w), "Phi3*Phi4", 'O', TF::O, false},
      {52, star(j2t, wt), "Phi3*Phi4", 'O', TF::O, false},
      {53, star(j2, -w), "Phi4*Phi6", 'O', TF::O, true},
      {54, star(j2, -wt), "Phi4*Phi6", 'O', TF::O, true},
      {55, star(j2t, -w), "Phi4*Phi6", 'O', TF::O, true},
      {56, star(j2t, -wt), "Phi4*Phi6", 'O', TF::O, true},
  };

  std::vector<TorsionClass> out;
  out.reserve(56);
  for (auto& s : specs) {
    TorsionClass t;
    t.id = s.id;
    t.matrix = s.matrix;
    t.charpoly_label = s.charpoly;
    t.case_label = s.case_label;
    t.family = s.family;
    t.sign_m1 = s.sign_m1;
    t.centralizer_chi = case_chi(s.case_label);
    t.order = order_of_label(s.charpoly);

    if (!is_symplectic(t.matrix))
      throw std::logic_error("torsion class " + std::to_string(t.id) +
                             ": not symplectic");
    if (order_of(t.matrix, 12) != t.order)
      throw std::logic_error("torsion class " + std::to_string(t.id) +
                             ": order mismatch");
    if (char_poly(t.matrix) != charpoly_of_label(t.charpoly_label))
      throw std::logic_error("torsion class " + std::to_string(t.id) +
                             ": characteristic polynomial mismatch");
    out.push_back(std::move(t));
  }

  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (out[i].matrix == out[j].matrix)
        throw std::logic_error("torsion classes not distinct: " +
                               std::to_string(out[i].id) + " vs " +
                               std::to_string(out[j].id));
  return out;
}

}  // namespace

const std::vector<TorsionClass>& torsion_classes() {
  static const std::vector<TorsionClass> all = build_all();
  return all;
}

const TorsionClass& torsion_class(int id) {
  if (id < 1 || id > 56) throw std::out_of_range("torsion_class: id out of range");
  return torsion_classes()[static_cast<size_t>(id - 1)];
}

}  // namespace sp4
