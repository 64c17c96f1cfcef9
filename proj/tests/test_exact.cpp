#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sp4/exact.hpp"
#include "sp4/torsion.hpp"

using namespace sp4;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(rat(2, -4) == rat(-1, 2));
  CHECK(rat(2, -4).get_den() == 2);
  CHECK(to_string(rat(-7, 3)) == "-7/3");
  CHECK(to_string(rat(6, 3)) == "2");
  CHECK_THROWS(rat(1, 0));
}

TEST_CASE("rational arithmetic laws on random inputs") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  auto r = [&] { return rat(num(rng), den(rng)); };
  for (int i = 0; i < 300; ++i) {
    const Rat a = r(), b = r(), c = r();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    Rat reduced = a;
    reduced.canonicalize();
    CHECK(reduced == a);
  }
}

TEST_CASE("integrality checks") {
  CHECK(is_integer(rat(4, 2)));
  CHECK_FALSE(is_integer(rat(1, 2)));
  CHECK(to_int(rat(-6, 3)) == -2);
  CHECK_THROWS_AS(to_int(rat(1, 3)), std::domain_error);
}

TEST_CASE("matrix product basics") {
  const Mat4 id = Mat4::Identity();
  CHECK(mat_mul(id, id) == id);

  const Mat4& j = symplectic_form();
  CHECK(mat_mul(j, j) == Mat4(-id));

  // U dotplus U^t squares to the identity.
  const Mat2 u = mat2({1, 0, 1, -1});
  const Mat4 t4 = dotplus(u, u.transpose());
  CHECK(mat_mul(t4, t4) == id);
}

TEST_CASE("characteristic polynomial by cofactor expansion") {
  const std::array<Int, 5> id_poly = char_poly(Mat4::Identity());
  CHECK(id_poly == std::array<Int, 5>{1, -4, 6, -4, 1});

  // Phi_5 for the order-5 class.
  CHECK(char_poly(torsion_class(18).matrix) == std::array<Int, 5>{1, 1, 1, 1, 1});

  // (x^2 - 1)^2 for diag(1,-1,1,-1).
  CHECK(char_poly(torsion_class(3).matrix) == std::array<Int, 5>{1, 0, -2, 0, 1});
}

TEST_CASE("symplectic test") {
  CHECK(is_symplectic(Mat4::Identity()));
  CHECK_FALSE(is_symplectic(mat4({2, 0, 0, 0,  //
                                  0, 1, 0, 0,  //
                                  0, 0, 1, 0,  //
                                  0, 0, 0, 1})));
  for (const auto& t : torsion_classes()) CHECK(is_symplectic(t.matrix));
}

TEST_CASE("torsion inverse is the complementary power") {
  CHECK(mat_inverse_torsion(Mat4::Identity(), 1) == Mat4(Mat4::Identity()));

  // S^{-1} = S^4.
  CHECK(mat_inverse_torsion(torsion_class(18).matrix, 5) == torsion_class(21).matrix);

  const Mat4& t39 = torsion_class(39).matrix;
  CHECK(mat_inverse_torsion(t39, 8) == mat_pow(t39, 7));

  CHECK_THROWS_AS(mat_inverse_torsion(torsion_class(18).matrix, 4),
                  std::invalid_argument);
}

TEST_CASE("every representative is inverted by its order") {
  for (const auto& t : torsion_classes()) {
    const Mat4 inv = mat_inverse_torsion(t.matrix, t.order);
    CHECK(Mat4(inv * t.matrix) == Mat4(Mat4::Identity()));
  }
}
