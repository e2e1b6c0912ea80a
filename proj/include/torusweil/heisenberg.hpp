#pragma once

#include "torusweil/arith.hpp"
#include "torusweil/linalg.hpp"
#include "torusweil/symplectic.hpp"

namespace torusweil {

/// Element (v, lambda) of the Heisenberg group H(V) = V x F_p with
/// (v,l) * (v',l') = (v+v', l+l'+ omega(v,v')/2).
struct HeisenbergElement {
  Vec2 v;
  Fp lambda;

  HeisenbergElement() = default;
  HeisenbergElement(Vec2 v_, Fp l_) : v(v_), lambda(l_) {}
  HeisenbergElement(long q, long pcoord, long l, long p)
      : v(q, pcoord, p), lambda(l, p) {}

  long p() const { return lambda.modulus(); }
};

HeisenbergElement h_mul(const HeisenbergElement& e, const HeisenbergElement& f);
HeisenbergElement h_inverse(const HeisenbergElement& e);
HeisenbergElement h_identity(long p);

/// Schroedinger-model operators on functions on the Lagrangian coordinate
/// line V_1 = span(e_1), indexed by the canonical lifts 0..p-1.
///
/// For e = ((q,r), lambda) the kernel is
///   K(x, y) = psi(r q / 2 + r x + lambda) * [y = x + q],
/// so the center (0, lambda) acts by the scalar psi(lambda) and the vector
/// operators obey pi(u) pi(v) = psi(omega(u,v)/2) pi(u+v).
class HeisenbergRep {
 public:
  explicit HeisenbergRep(long p);

  long p() const { return p_; }
  const AdditiveCharacter& psi() const { return psi_; }

  CMat pi_vector(const Vec2& v) const;
  CMat pi_heis(const HeisenbergElement& e) const;

  // O(p) application of pi_heis(e) to a state vector.
  CVec apply(const HeisenbergElement& e, const CVec& f) const;
  CVec apply_vector(const Vec2& v, const CVec& f) const;

 private:
  long p_;
  AdditiveCharacter psi_;
};

// Joint commutant dimension of {pi(v) : v in V}; 1 certifies irreducibility.
int heisenberg_commutant_dimension(long p);

}  // namespace torusweil
