#pragma once

// Exact scalar and 4x4 integer matrix layer. Everything downstream works
// over arbitrary-precision integers (GMP) and rationals; the dense types
// are fixed-size Eigen matrices instantiated on the GMP scalars.

#include <gmpxx.h>

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace sp4 {

using Int = mpz_class;
using Rat = mpq_class;

using Mat4 = Eigen::Matrix<Int, 4, 4>;
using Mat2 = Eigen::Matrix<Int, 2, 2>;

/// Exact rational from numerator/denominator, stored in lowest terms with
/// positive denominator.
Rat rat(long num, long den = 1);

/// True iff q has denominator 1.
bool is_integer(const Rat& q);

/// Numerator of an integral rational; throws if q is not an integer.
Int to_int(const Rat& q);

/// "p/q" (or bare "p" when q = 1).
std::string to_string(const Rat& q);

Mat4 mat4(std::initializer_list<long> entries);
Mat2 mat2(std::initializer_list<long> entries);

/// The standard symplectic form [[0, id2], [-id2, 0]].
const Mat4& symplectic_form();

Mat4 mat_mul(const Mat4& a, const Mat4& b);

Mat4 mat_pow(const Mat4& m, unsigned e);

/// Coefficients c0..c4 (ascending powers, c4 = 1) of det(x*id - m),
/// by cofactor expansion over Z[x].
std::array<Int, 5> char_poly(const Mat4& m);

/// m^t J m = J for the standard symplectic form J.
bool is_symplectic(const Mat4& m);

/// Inverse of a torsion matrix, realized as m^(order-1).
/// Throws std::invalid_argument unless m^order = id.
Mat4 mat_inverse_torsion(const Mat4& m, unsigned order);

}  // namespace sp4
