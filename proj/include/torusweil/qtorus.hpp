#pragma once

#include <map>
#include <utility>

#include "torusweil/linalg.hpp"
#include "torusweil/symplectic.hpp"

namespace torusweil {

/// Planck parameter h = M/N in lowest terms, with the parity bit
/// epsilon = MN mod 2 that selects the twisted relation.
struct RationalPlanck {
  long M;
  long N;

  RationalPlanck(long M_, long N_);

  int epsilon() const { return int(((M % 2) * (N % 2) + 2) % 2); }
  cplx gamma() const { return std::polar(1.0, -2.0 * kPi * double(M) / double(N)); }
};

/// A map q : Z^2 -> C^* with q(xi+eta) = (-1)^{MN omega(xi,eta)} q(xi) q(eta),
/// determined by its unit values on the basis.
class TwistedCharacter {
 public:
  TwistedCharacter(const RationalPlanck& h, cplx q1, cplx q2);

  cplx q1() const { return q1_; }
  cplx q2() const { return q2_; }
  cplx at(long m, long n) const;

  // Law defect max over pairs in the box |m|,|n| <= box.
  double law_defect(long box) const;
  // max |q(B^{-1} xi)/q(xi) - 1| over the box.
  double invariance_defect(const IntMat2& B, long box) const;

 private:
  long M_, N_;
  cplx q1_, q2_;
};

// q_o(m,n) = (-1)^{MN(mn+m+n)}, the unique SL2(Z)-fixed twisted character.
TwistedCharacter fixed_twisted_character(const RationalPlanck& h);
cplx q_o_value(const RationalPlanck& h, long m, long n);

// Brute-force search over twisted characters whose basis values are 2N-th
// roots of unity; returns those invariant under S and T on the box.
std::vector<TwistedCharacter> invariant_character_search(const RationalPlanck& h,
                                                         long box = 10);

/// Irreducible representation of the quantum torus on N^n points, built from
/// clock and shift operators. Two scalings of the same projective family:
///   TwoDim        — s(xi+eta) = e^{pi i h omega} s(xi) s(eta); the scalar of
///                   s(N xi) is q_o(xi).
///   EpsilonTwisted— s(xi+eta) = (-1)^{eps omega} e^{pi i h omega} s(xi) s(eta);
///                   the scalar of s(N xi) is 1.
class TorusRep {
 public:
  enum class Scaling { TwoDim, EpsilonTwisted };

  TorusRep(const RationalPlanck& h, int n = 1,
           Scaling scaling = Scaling::TwoDim);

  long N() const { return h_.N; }
  int n() const { return n_; }
  long dim() const { return dim_; }
  const RationalPlanck& planck() const { return h_; }
  Scaling scaling() const { return scaling_; }

  // n=1: xi = (m, n'); n=2: xi = (m1, m2, n1, n2) in the grouped convention.
  CMat op(const std::vector<long>& xi) const;
  CMat op(long m, long n) const;

  // Scalar lambda with op(N*xi) = lambda I; throws if it is not scalar.
  cplx attached_scalar(const std::vector<long>& xi) const;

 private:
  cplx zeta_pow(long e) const;  // e^{2 pi i e / (2N)}
  cplx pair_phase(long m, long n) const;

  RationalPlanck h_;
  int n_;
  long dim_;
  Scaling scaling_;
};

// Operator-norm defect of the correspondence-principle commutator test at
// h = 1/N: || 2 pi i N [Op(f), Op(g)] - Op({f,g}) || with the bracket of
// lattice characters {xi, eta} = 4 pi^2 omega(xi,eta) (xi+eta), the constant
// matched to the deformation so the defect vanishes as N grows.
using LatticePoly = std::map<std::pair<long, long>, cplx>;
double semiclassical_defect(const LatticePoly& f, const LatticePoly& g, long N);

}  // namespace torusweil
