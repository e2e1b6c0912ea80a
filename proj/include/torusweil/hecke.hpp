#pragma once

#include <memory>
#include <stdexcept>

#include "torusweil/weil.hpp"

namespace torusweil {

struct NotHyperbolicError : std::runtime_error {
  NotHyperbolicError() : std::runtime_error("matrix is not hyperbolic over Z") {}
};
struct ParabolicPrimeError : std::runtime_error {
  explicit ParabolicPrimeError(long p)
      : std::runtime_error("tr^2 - 4 vanishes mod " + std::to_string(p) +
                           "; centralizer is not a torus") {}
};
struct MultiplicityTwoError : std::runtime_error {
  MultiplicityTwoError()
      : std::runtime_error("eigenspace is not one-dimensional") {}
};
struct NotSplitError : std::runtime_error {
  NotSplitError() : std::runtime_error("torus does not split over F_p") {}
};

enum class TorusKind { Split, Inert };

/// Centralizer of the reduced cat map in SL2(F_p): a cyclic group of order
/// p-1 (split) or p+1 (inert). Elements are stored as generator powers, so
/// elements[k] = generator^k and characters evaluate by power index.
struct HeckeTorus {
  long p = 0;
  Mat2 A;
  TorusKind kind = TorusKind::Inert;
  Mat2 generator;
  std::vector<Mat2> elements;

  long order() const { return long(elements.size()); }
  CyclicCharacter quadratic_character() const {
    return CyclicCharacter(order(), order() / 2);
  }
};

// Brute-force centralizer over all of SL2(F_p). Throws NotHyperbolicError or
// ParabolicPrimeError when the hypotheses fail.
HeckeTorus hecke_torus(const IntMat2& A, long p);

struct WignerValue {
  CyclicCharacter chi;
  Vec2 xi;
  cplx value;
  cplx normalized;  // value * sqrt(p) / 2
};

/// Spectral machinery for one torus: Hecke projectors, eigenvectors, Wigner
/// matrix coefficients, and the character-level trace sums.
class HeckeAnalysis {
 public:
  explicit HeckeAnalysis(const HeckeTorus& T);

  const HeckeTorus& torus() const { return torus_; }
  const WeilRep& weil() const { return *weil_; }

  // The paper's projector is written with chi(B); here the sum carries
  // conj(chi(B)) so that range(P_chi) is the chi-eigenspace, i.e.
  // rho(B) v = chi(B) v holds on it (verified by the unit tests).
  CMat projector(const CyclicCharacter& chi) const;
  int projector_rank(const CyclicCharacter& chi) const;

  // Unit vector spanning the chi-eigenspace; requires rank 1.
  CVec eigenvector(const CyclicCharacter& chi) const;

  WignerValue wigner(const CyclicCharacter& chi, const Vec2& xi) const;

  // sum_B Tr(rho(B) pi(xi)) chi(B); bounded by 2 sqrt(p) for xi != 0.
  cplx restated_sum(const CyclicCharacter& chi, const Vec2& xi) const;

  // (1/|T|) sum_B rho(B) pi(xi) rho(B)^{-1}, built from operator products.
  CMat averaged_operator(const Vec2& xi) const;
  // Same average computed through the Egorov identity as (1/|T|) sum pi(B xi).
  CMat averaged_operator_orbit(const Vec2& xi) const;

  // Dense rho(B) for every torus element, built on first use. Not guarded:
  // share an analysis object across threads only after warming the cache.
  const std::vector<CMat>& rho_cache() const;

 private:
  HeckeTorus torus_;
  std::shared_ptr<WeilRep> weil_;
  std::vector<CVec> seed_images_;       // rho(g^k) u for a fixed seed u
  std::vector<cplx> element_traces_;    // Tr rho(g^k)
  mutable std::vector<CMat> rho_mats_;  // filled on demand
};

// F(B, xi) = Tr(rho(B) pi(xi)).
cplx trace_function(const WeilRep& weil, const Mat2& B, const Vec2& xi);

/// Torus diagonalization for split primes: S A S^{-1} = diag(alpha, 1/alpha),
/// giving the isomorphism iota(B) = (S B S^{-1})_{11} to F_p^*. Swapping the
/// eigenvalue ordering relabels the summation a -> 1/a and leaves the
/// exponential sum unchanged; the empirical two-fold ambiguity is whether a
/// character or its conjugate pairs with a given Wigner value, carried by
/// conjugate_characters.
struct SplitDiagonalization {
  Mat2 S;
  bool conjugate_characters = false;

  Fp iota(const Mat2& B) const {
    Mat2 d = S * B * S.inverse();
    return d.a;
  }
};

SplitDiagonalization diagonalize_split(const HeckeTorus& T);

// Resolves the pairing by matching |wigner| against the exponential sum on
// the first non-quadratic character at probe_xi.
SplitDiagonalization aligned_split_diagonalization(const HeckeTorus& T,
                                                   const HeckeAnalysis& an,
                                                   const Vec2& probe_xi);

// (1/|T|) sum_{a != 1} psi( (l m / 2) (a+1)/(a-1) ) legendre(a) chi(B_a)
// where (l, m) are the coordinates of S xi and a = iota(B). An exponential
// sum computing the Wigner value with no matrices involved.
cplx split_formula(const HeckeTorus& T, const SplitDiagonalization& diag,
                   const CyclicCharacter& chi, const Vec2& xi);

struct LNormPair {
  double lhs;
  cplx rhs;
};

// Tr((Av^dag Av)^N) against the zero-sum tuple exponential sum over the
// torus orbit of xi. The exact identity carries a factor p and half-weights
// inside psi:
//   lhs = (p / |T|^{2N}) sum_{x in X} psi( (1/2) sum_{i<j} omega(x_i, x_j) ),
// X the 2N-tuples of orbit points summing to zero.
LNormPair l_norm_identity(const HeckeAnalysis& an, const Vec2& xi, long N,
                          double tuple_budget = 1e7);

struct BoundRow {
  long p = 0;
  TorusKind kind = TorusKind::Inert;
  double max_normalized = 0.0;  // max over chi, xi of |W| sqrt(p)/2
  double max_sharp = 0.0;       // max over chi, xi of |W| |T|/(2 sqrt p)
  bool pass_asymptotic = false; // max_normalized <= 1 + slack
  bool pass_sharp = false;      // max_sharp <= 1 + slack (exact theorem)
};

// Matrix-coefficient bound sweep over all primes in [pmin, pmax] that keep
// the torus hypotheses; every non-quadratic chi and every xi != 0. The exact
// character-level theorem bounds |W| by 2 sqrt(p)/|T|, so max_sharp <= 1
// always; max_normalized can reach p/(p-1) at split primes.
std::vector<BoundRow> kr_bound_sweep(const IntMat2& A, long pmin, long pmax,
                                     double slack, int threads = 0);

struct SatoTateRow {
  long p = 0;
  long torus_order = 0;
  TorusKind kind = TorusKind::Inert;
  double ks = 0.0;      // Kolmogorov-Smirnov distance to the arcsine law
  double max_abs = 0.0; // max |normalized value| before clipping
  double max_im = 0.0;  // max |imaginary part| of normalized values
  std::vector<cplx> normalized;   // W sqrt(p)/2, one per non-quadratic chi
  std::vector<double> clipped;    // real parts clipped to [-1,1] (the sample)
};

// CDF of the projection of uniform circle measure to a diameter.
double arcsine_cdf(double x);
double ks_distance_to_arcsine(std::vector<double> samples);

// One row per admissible prime in [pmin, pmax]; the probe character is the
// reduction of the lattice point (xi_l, xi_m).
std::vector<SatoTateRow> sato_tate(const IntMat2& A, long pmin, long pmax,
                                   long xi_l, long xi_m, int threads = 0);

}  // namespace torusweil
