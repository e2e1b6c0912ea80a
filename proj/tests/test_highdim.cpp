#include <random>

#include "doctest.h"
#include "torusweil/highdim.hpp"

using namespace torusweil;

TEST_CASE("block elements are symplectic") {
  for (long p : {5L, 7L}) {
    CHECK(is_symplectic4(block_element(IntMat2{2, 1, 1, 1}, p)));
    CHECK(is_symplectic4(block_element(IntMat2{0, 1, 1, 0}, p)));  // det -1
    CHECK(is_symplectic4(block_element(IntMat2{1, 0, 0, 1}, p)));
  }
  CHECK_THROWS(block_element(IntMat2{2, 0, 0, 1}, 5));
}

TEST_CASE("ergodicity flag from the eigenvalue criterion") {
  CHECK(block_is_ergodic(IntMat2{2, 1, 1, 1}));    // (3 +- sqrt 5)/2
  CHECK(block_is_ergodic(IntMat2{2, 1, 1, 0}));    // det -1, |trace| 2
  CHECK_FALSE(block_is_ergodic(IntMat2{0, 1, 1, 0}));   // eigenvalues +-1
  CHECK_FALSE(block_is_ergodic(IntMat2{1, 0, 0, 1}));   // identity
  CHECK_FALSE(block_is_ergodic(IntMat2{0, 1, -1, 0}));  // +-i
  CHECK_FALSE(block_is_ergodic(IntMat2{1, 1, -1, 0}));  // sixth roots
}

TEST_CASE("rho_block: identity, unitarity, multiplicativity, fixed vector") {
  long p = 5;
  CHECK(max_abs_diff(rho_block(IntMat2{1, 0, 0, 1}, p),
                     CMat::identity(int(p * p))) < 1e-12);

  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> d(-4, 4);
  int done = 0;
  while (done < 100) {
    IntMat2 b1{d(rng), d(rng), d(rng), d(rng)};
    IntMat2 b2{d(rng), d(rng), d(rng), d(rng)};
    if (mod_reduce(b1.det(), p) == 0 || mod_reduce(b2.det(), p) == 0) continue;
    ++done;
    CMat lhs = rho_block(b1, p) * rho_block(b2, p);
    CMat rhs = rho_block(b1 * b2, p);
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    CHECK(unitarity_defect(rho_block(b1, p)) < 1e-12);
  }

  // The constant function is fixed up to legendre(det B).
  IntMat2 b{2, 1, 1, 1};
  CMat r = rho_block(b, p);
  CVec ones(p * p, cplx(1.0, 0.0));
  CVec img = r * ones;
  double sign = double(legendre(mod_reduce(b.det(), p), p));
  for (size_t i = 0; i < img.size(); ++i) {
    CHECK(std::abs(img[i] - cplx(sign, 0.0)) < 1e-12);
  }
}

TEST_CASE("counterexample value is exactly 1 on the invariant Lagrangian") {
  for (long p : {5L, 7L, 11L}) {
    for (long a = 0; a < p; ++a) {
      for (long b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        cplx v = counterexample_value(IntMat2{2, 1, 1, 1}, p, Vec2(a, b, p));
        CHECK(std::abs(v - cplx(1.0, 0.0)) < 1e-12);
      }
    }
    CHECK_THROWS(counterexample_value(IntMat2{2, 1, 1, 1}, p, Vec2(0, 0, p)));
  }
}

TEST_CASE("centralizer of the block element is not commutative") {
  IntMat2 B{2, 1, 1, 1};
  for (long p : {7L, 11L}) {
    CentralizerReport rep = centralizer_structure(B, p);
    CHECK(rep.witness_found);
    // Witness really is a non-commuting pair inside the centralizer.
    Mat4 A = block_element(B, p);
    CHECK(rep.g1 * A == A * rep.g1);
    CHECK(rep.g2 * A == A * rep.g2);
    CHECK(rep.g1 * rep.g2 != rep.g2 * rep.g1);
    CHECK(is_symplectic4(rep.g1));
    CHECK(is_symplectic4(rep.g2));

    // Split prime: the diagonal-block part is the GL2 centralizer of B,
    // of order (p-1)^2 when B splits mod p.
    long t = B.trace();
    long disc = mod_reduce(t * t - 4, p);
    if (legendre(disc, p) == 1) {
      CHECK(rep.diag_count == (p - 1) * (p - 1));
    }
    // Identity is always there.
    CHECK(rep.diag_count >= 1);
  }
}
