#include <cmath>

#include "doctest.h"
#include "torusweil/arith.hpp"

using namespace torusweil;

TEST_CASE("psi is the standard additive character") {
  for (long p : {5L, 7L, 11L}) {
    AdditiveCharacter psi(p);
    CHECK(std::abs(psi(Fp(0, p)) - cplx(1.0, 0.0)) < 1e-12);

    // Nontrivial and additive on all pairs.
    bool nontrivial = false;
    for (long x = 0; x < p; ++x) {
      if (std::abs(psi(x) - cplx(1.0, 0.0)) > 0.1) nontrivial = true;
      for (long y = 0; y < p; ++y) {
        CHECK(std::abs(psi(Fp(x + y, p)) - psi(x) * psi(y)) < 1e-12);
      }
    }
    CHECK(nontrivial);

    // Full character sum vanishes.
    cplx sum = 0.0;
    for (long x = 0; x < p; ++x) sum += psi(x);
    CHECK(std::abs(sum) < 1e-10);

    // psi(x) psi(p - x) = 1.
    for (long x = 0; x < p; ++x) {
      CHECK(std::abs(psi(x) * psi(p - x) - cplx(1.0, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("legendre symbol values and multiplicativity") {
  CHECK(legendre(1, 7) == 1);
  CHECK(legendre(0, 7) == 0);
  // squares mod 7 are {1, 2, 4}
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(4, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(5, 7) == -1);
  CHECK(legendre(6, 7) == -1);

  for (long p : {5L, 7L, 11L, 13L}) {
    long sum = 0;
    for (long a = 1; a < p; ++a) {
      sum += legendre(a, p);
      for (long b = 1; b < p; ++b) {
        CHECK(legendre(a, p) * legendre(b, p) == legendre(a * b, p));
      }
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("gauss coefficient modulus and symmetries") {
  for (long p : {5L, 7L, 11L}) {
    for (long b = 1; b < p; ++b) {
      cplx g = gauss_coefficient(Fp(b, p));
      CHECK(std::abs(std::abs(g) - 1.0 / std::sqrt(double(p))) < 1e-10);
      // Negating b conjugates the coefficient, so g(b) g(-b) = 1/p.
      cplx gm = gauss_coefficient(Fp(-b, p));
      CHECK(std::abs(gm - std::conj(g)) < 1e-12);
      CHECK(std::abs(g * gm - cplx(1.0 / double(p), 0.0)) < 1e-10);
    }
  }
  CHECK_THROWS(gauss_coefficient(Fp(0, 7)));
}

TEST_CASE("quadratic substitution identity for Gauss sums") {
  // sum_t psi(s t / 2) legendre(t) = sum_t psi(s t^2 / 2), s != 0.
  for (long p : {5L, 7L, 11L, 13L}) {
    AdditiveCharacter psi(p);
    for (long s = 1; s < p; ++s) {
      cplx lhs = 0.0, rhs = 0.0;
      for (long t = 0; t < p; ++t) {
        lhs += psi.at_half(Fp(s * t, p)) * double(legendre(t, p));
        rhs += psi.at_half(Fp(s * t * t, p));
      }
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("cyclic characters: orthogonality and group law") {
  auto one = cyclic_characters(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_trivial());

  for (long m : {3L, 8L, 12L}) {
    auto chars = cyclic_characters(m);
    REQUIRE(long(chars.size()) == m);
    for (size_t i = 0; i < chars.size(); ++i) {
      for (size_t j = 0; j < chars.size(); ++j) {
        cplx sum = 0.0;
        for (long k = 0; k < m; ++k) {
          sum += chars[i].at_power(k) * std::conj(chars[j].at_power(k));
        }
        cplx expected = (i == j) ? cplx(double(m), 0.0) : cplx(0.0, 0.0);
        CHECK(std::abs(sum - expected) < 1e-9);
      }
    }
    // chi_j * chi_k = chi_{j+k mod m}
    for (long j = 0; j < m; ++j) {
      for (long k = 0; k < m; ++k) {
        CyclicCharacter prod = chars[j] * chars[k];
        CHECK(prod.index() == (j + k) % m);
      }
    }
  }

  // m = 8: sum over the group of a nontrivial character vanishes.
  CyclicCharacter chi3(8, 3);
  cplx s = 0.0;
  for (long k = 0; k < 8; ++k) s += chi3.at_power(k);
  CHECK(std::abs(s) < 1e-12);
}

TEST_CASE("p below 5 is rejected") {
  CHECK_THROWS(require_odd_prime(2));
  CHECK_THROWS(require_odd_prime(3));
  CHECK_THROWS(require_odd_prime(4));
  CHECK_THROWS(require_odd_prime(9));
  CHECK_NOTHROW(require_odd_prime(5));
  CHECK_NOTHROW(require_odd_prime(97));
}
