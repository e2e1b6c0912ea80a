#pragma once

#include <vector>

#include "torusweil/arith.hpp"

namespace torusweil {

/// Vector in the symplectic plane V = F_p^2.
struct Vec2 {
  Fp x, y;

  Vec2() = default;
  Vec2(Fp x_, Fp y_) : x(x_), y(y_) {}
  Vec2(long x_, long y_, long p) : x(x_, p), y(y_, p) {}

  long p() const { return x.modulus(); }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 scaled(const Fp& t) const { return {t * x, t * y}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

// The standard symplectic form, omega((x,y),(x',y')) = x y' - y x'.
Fp omega(const Vec2& u, const Vec2& v);

// General 2n-vector with the grouped form
// omega(u,v) = sum_i u_i v_{n+i} - u_{n+i} v_i.
using FpVec = std::vector<Fp>;
Fp omega(const FpVec& u, const FpVec& v);

/// 2x2 integer matrix; elements of SL2(Z) have det 1.
struct IntMat2 {
  long a = 1, b = 0, c = 0, d = 1;

  long det() const { return a * d - b * c; }
  long trace() const { return a + d; }
  IntMat2 operator*(const IntMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  // Inverse, valid when det = +-1.
  IntMat2 inverse() const;
};

/// 2x2 matrix over F_p; group elements are the det-1 ones.
struct Mat2 {
  Fp a, b, c, d;

  Mat2() = default;
  Mat2(Fp a_, Fp b_, Fp c_, Fp d_) : a(a_), b(b_), c(c_), d(d_) {}
  Mat2(long a_, long b_, long c_, long d_, long p)
      : a(a_, p), b(b_, p), c(c_, p), d(d_, p) {}

  static Mat2 identity(long p) { return Mat2(1, 0, 0, 1, p); }

  long p() const { return a.modulus(); }
  Fp det() const { return a * d - b * c; }
  Fp trace() const { return a + d; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  // Inverse for det-1 elements.
  Mat2 inverse() const { return {d, -b, -c, a}; }
  Vec2 operator*(const Vec2& v) const {
    return {a * v.x + b * v.y, c * v.x + d * v.y};
  }
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
};

// Entrywise reduction; rejects det != 1 over Z.
Mat2 reduce_mod_p(const IntMat2& m, long p);

// |trace| > 2 over Z.
bool is_hyperbolic(const IntMat2& m);

enum class BruhatCell { BigCell, LowerBorel };

// BigCell iff the upper-right entry is nonzero; otherwise the element lies
// in the lower-triangular Borel [[a,0],[r,a^{-1}]].
BruhatCell bruhat_cell(const Mat2& g);

// All p(p^2-1) elements of SL2(F_p).
std::vector<Mat2> enumerate_sl2(long p);

// Standard generators S = [[0,1],[-1,0]] and T = [[1,1],[0,1]].
Mat2 weyl_element(long p);
Mat2 shear_element(long p);

// Multiplicative order of a det-1 element.
long element_order(const Mat2& g);

}  // namespace torusweil
