#pragma once

#include <array>

#include "torusweil/linalg.hpp"
#include "torusweil/symplectic.hpp"

namespace torusweil {

/// 4x4 matrix over F_p, used only for the block symplectic elements of the
/// four-dimensional torus examples.
struct Mat4 {
  long p = 0;
  std::array<std::array<Fp, 4>, 4> m;

  static Mat4 zero(long p);
  static Mat4 identity(long p);
  Mat4 operator*(const Mat4& o) const;
  Mat4 transpose() const;
  bool operator==(const Mat4& o) const;
  bool operator!=(const Mat4& o) const { return !(*this == o); }
};

// The grouped symplectic Gram matrix J = [[0, I], [-I, 0]].
Mat4 symplectic_gram(long p);
bool is_symplectic4(const Mat4& a);

// A = [[B, 0], [0, tB^{-1}]] mod p; requires det B = +-1 over Z.
Mat4 block_element(const IntMat2& B, long p);
Mat4 antidiag_element(const Mat2& C);  // [[0, C], [-tC^{-1}, 0]]

// True when neither eigenvalue of B lies on the unit circle (the automorphism
// of the continuous torus is ergodic). Checked numerically with a 1e-9 margin
// plus the exact list of degree <= 2 cyclotomic/unit-root traces.
bool block_is_ergodic(const IntMat2& B);

// [rho(B) phi](x) = legendre(det B) phi(B^{-1} x) on functions on F_p^2.
CMat rho_block(const IntMat2& B, long p);

// <phi | pi(xi) phi> for phi = 1/p and pi(xi) acting by translation; equals 1
// for every nonzero xi in the invariant Lagrangian plane.
cplx counterexample_value(const IntMat2& B, long p, const Vec2& xi);

struct CentralizerReport {
  long diag_count = 0;       // {(M,0;0,tM^{-1})} commuting with A
  long antidiag_count = 0;   // {(0,C;-tC^{-1},0)} commuting with A
  bool witness_found = false;
  Mat4 g1, g2;               // a non-commuting pair inside the centralizer
};

// Brute-force search of the centralizer of block_element(B) within the block
// shapes; a non-commuting pair certifies that the centralizer of an ergodic
// 4-dimensional automorphism need not be commutative.
CentralizerReport centralizer_structure(const IntMat2& B, long p);

}  // namespace torusweil
