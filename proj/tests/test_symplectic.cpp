#include <random>

#include "doctest.h"
#include "torusweil/symplectic.hpp"

using namespace torusweil;

TEST_CASE("omega: standard values, bilinearity, antisymmetry") {
  long p = 7;
  Vec2 e1(1, 0, p), e2(0, 1, p);
  CHECK(omega(e1, e2).value() == 1);

  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> d(0, p - 1);
  for (int i = 0; i < 100; ++i) {
    Vec2 u(d(rng), d(rng), p), v(d(rng), d(rng), p);
    CHECK(omega(u, u).value() == 0);
    CHECK((omega(u, v) + omega(v, u)).value() == 0);
  }
  // Nondegenerate: for every u != 0 some v pairs nontrivially.
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      Vec2 u(a, b, p);
      bool hit = false;
      for (long c = 0; c < p && !hit; ++c) {
        for (long e = 0; e < p && !hit; ++e) {
          if (!omega(u, Vec2(c, e, p)).is_zero()) hit = true;
        }
      }
      CHECK(hit);
    }
  }
  CHECK_THROWS(omega(FpVec{Fp(1, p), Fp(0, p)},
                     FpVec{Fp(1, p), Fp(0, p), Fp(0, p), Fp(0, p)}));
}

TEST_CASE("reduce_mod_p and the reduced order of the cat map") {
  IntMat2 A{2, 1, 1, 1};
  Mat2 r = reduce_mod_p(A, 7);
  CHECK(r.a.value() == 2);
  CHECK(r.b.value() == 1);
  CHECK(r.c.value() == 1);
  CHECK(r.d.value() == 1);
  CHECK(reduce_mod_p(IntMat2{1, 0, 0, 1}, 11) == Mat2::identity(11));
  CHECK_THROWS(reduce_mod_p(IntMat2{2, 0, 0, 1}, 7));

  // A^8 mod 7 against the multiplicative order computed by brute force.
  long ord = element_order(r);
  Mat2 acc = Mat2::identity(7);
  for (int i = 0; i < 8; ++i) acc = acc * r;
  CHECK((acc == Mat2::identity(7)) == (8 % ord == 0));
}

TEST_CASE("reduce_mod_p is a homomorphism") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> d(-6, 6);
  long p = 11;
  int done = 0;
  while (done < 100) {
    IntMat2 a{d(rng), d(rng), d(rng), d(rng)};
    IntMat2 b{d(rng), d(rng), d(rng), d(rng)};
    if (a.det() != 1 || b.det() != 1) continue;
    ++done;
    CHECK(reduce_mod_p(a * b, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p));
  }
}

TEST_CASE("hyperbolicity is the |trace| > 2 test") {
  CHECK(is_hyperbolic(IntMat2{2, 1, 1, 1}));
  CHECK_FALSE(is_hyperbolic(IntMat2{1, 0, 0, 1}));
  CHECK_FALSE(is_hyperbolic(IntMat2{0, 1, -1, 0}));
  CHECK_FALSE(is_hyperbolic(IntMat2{1, 1, 0, 1}));
}

TEST_CASE("Bruhat cells partition SL2(F_5)") {
  long p = 5;
  CHECK(bruhat_cell(weyl_element(p)) == BruhatCell::BigCell);
  CHECK(bruhat_cell(Mat2(2, 0, 3, 3, p)) == BruhatCell::LowerBorel);

  auto group = enumerate_sl2(p);
  CHECK(long(group.size()) == p * (p * p - 1));  // 120
  long big = 0, borel = 0;
  for (const Mat2& g : group) {
    CHECK(g.det().value() == 1);
    if (bruhat_cell(g) == BruhatCell::BigCell) {
      ++big;
    } else {
      ++borel;
      CHECK(g.b.is_zero());
      CHECK((g.a * g.d).value() == 1);
    }
  }
  CHECK(big + borel == 120);
  // Borel cell has p(p-1) elements.
  CHECK(borel == p * (p - 1));
}

TEST_CASE("group action preserves omega") {
  long p = 7;
  auto group = enumerate_sl2(p);
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
  Vec2 e1(1, 0, p), e2(0, 1, p);
  for (int i = 0; i < 50; ++i) {
    const Mat2& g = group[pick(rng)];
    CHECK(omega(g * e1, g * e2) == omega(e1, e2));
    Vec2 u(i % 7, (3 * i + 1) % 7, p), v((i * i) % 7, (i + 5) % 7, p);
    CHECK(omega(g * u, g * v) == omega(u, v));
  }
}

TEST_CASE("|SL2(F_7)| matches the closed form") {
  CHECK(enumerate_sl2(7).size() == size_t(7 * 48));
}
