#pragma once

#include "torusweil/heisenberg.hpp"

namespace torusweil {

/// A Lagrangian line in V = F_p^2 together with a Legendre-equivariant sign
/// function rho_L on its nonzero vectors. The line is stored through its
/// canonical direction (first nonzero coordinate 1); the orientation bit is
/// rho_L at that direction, so rho_L(t * dir) = legendre(t) * orient.
struct OrientedLagrangian {
  Vec2 dir;
  int orient = 1;  // +1 or -1

  long p() const { return dir.p(); }
  bool same_line(const OrientedLagrangian& o) const { return dir == o.dir; }
  OrientedLagrangian flipped() const { return {dir, -orient}; }
};

// All 2(p+1) oriented Lagrangians: lines (1,s), s in F_p, and (0,1), each
// with both orientations.
std::vector<OrientedLagrangian> enumerate_oriented_lagrangians(long p);

// Canonical direction of the line through a nonzero vector.
Vec2 canonical_direction(const Vec2& v);

/// Model spaces H_L = {f : H -> C, f(l~ e) = psi(lambda(l~)) f(e)} realized on
/// a p-point transversal, the canonical intertwiners theta between them, and
/// the Weil action transported to the fixed model on L = span(e_2).
///
/// The transversal of H/L~ consists of the section points (x*c0, 0) where c0
/// is the fixed complement direction of the line ((1,0), or (0,1) for the
/// line spanned by (1,0)).
class LagrangianSystem {
 public:
  explicit LagrangianSystem(long p);

  long p() const { return p_; }

  Vec2 complement_direction(const Vec2& line_dir) const;

  // rho_L at an arbitrary nonzero vector of the line.
  int orientation_at(const OrientedLagrangian& L, const Vec2& v) const;

  // Value of the model vector (given on the transversal) at any point of H.
  cplx evaluate(const Vec2& line_dir, const CVec& transversal_values,
                const HeisenbergElement& e) const;

  // Right translation action of H on the model of the given line.
  CMat right_action(const Vec2& line_dir, const HeisenbergElement& h) const;

  // Unnormalized averaging operator H_{L1} -> H_{L2}; lines must differ.
  CMat theta_hat(const Vec2& line1, const Vec2& line2) const;

  // Normalization factor; xi2 must be a nonzero vector of L2.
  cplx normalization_a(const OrientedLagrangian& L1, const OrientedLagrangian& L2,
                       const Vec2& xi2) const;

  // Canonical intertwiner H_{L1} -> H_{L2}: a * theta_hat in general
  // position, +-identity on a common line.
  CMat theta(const OrientedLagrangian& L1, const OrientedLagrangian& L2) const;

  // Constants of the cocycle decomposition for a general-position triple:
  // theta_hat(L2,L3) theta_hat(L1,L2) = C * theta_hat(L1,L3) and D*C = 1.
  cplx cocycle_C(const Vec2& line1, const Vec2& line2, const Vec2& line3) const;
  cplx cocycle_D(const Vec2& line1, const OrientedLagrangian& L2,
                 const Vec2& line3) const;

  // Image of an oriented Lagrangian under g (orientation transported by
  // rho^g(l) = rho(g^{-1} l)).
  OrientedLagrangian act(const Mat2& g, const OrientedLagrangian& L) const;

  // Weil operator on the fixed model H_{L2deg}, L2deg = (span(e_2), +1):
  // theta(g L2deg -> L2deg) composed with the g-translate.
  CMat canonical_weil(const Mat2& g) const;

  // Rank of the L~-equivariance projector on all functions on H (p^3 dim);
  // equals the model dimension p.
  int model_dimension(const Vec2& line_dir) const;

 private:
  // v = t*dir + x*c0.
  void decompose(const Vec2& v, const Vec2& dir, const Vec2& c0, Fp* t,
                 Fp* x) const;

  long p_;
  AdditiveCharacter psi_;
};

}  // namespace torusweil
