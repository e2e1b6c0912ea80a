#pragma once

#include <map>
#include <utility>

#include "torusweil/heisenberg.hpp"

namespace torusweil {

/// The Weil representation of SL2(F_p) on functions on F_p, through its
/// Bruhat-cell kernels.
///
/// Big cell (b != 0):
///   K(g,x,y) = a_g psi( -(d/2b) x^2 + ((b^{-1}-c+a b^{-1} d)/2) x y - (a/2b) y^2 ),
///   a_g the Gauss normalization for b.
/// Lower Borel g = [[a,0],[r,a^{-1}]]:
///   K(g,x,y) = legendre(a) psi(-(r a^{-1}/2) x^2) [y = a^{-1} x].
class WeilRep {
 public:
  explicit WeilRep(long p);

  long p() const { return p_; }
  const HeisenbergRep& heisenberg() const { return heis_; }

  CMat rho(const Mat2& g) const;
  cplx rho_entry(const Mat2& g, long x, long y) const;

  // max-entry error of rho(B) pi(v) rho(B)^{-1} - pi(Bv).
  double egorov_error(const Mat2& B, const Vec2& v) const;

  // Closed-form kernel of rho(g) pi(e) on the big cell; rejects b = 0.
  CMat total_kernel(const Mat2& g, const HeisenbergElement& e) const;

  // Tr(rho(B) pi(xi)), evaluated in O(p) from the closed-form kernels.
  cplx trace_rho_pi(const Mat2& B, const Vec2& xi) const;

  // Weyl quantization of a trigonometric polynomial given by its Fourier
  // coefficients on lattice points.
  CMat quantize(const std::map<std::pair<long, long>, cplx>& coeffs) const;

 private:
  cplx gauss_for(const Fp& b) const;

  long p_;
  HeisenbergRep heis_;
  std::vector<cplx> gauss_table_;  // gauss coefficient per nonzero b
};

}  // namespace torusweil
