#include <random>

#include "doctest.h"
#include "torusweil/weil.hpp"

using namespace torusweil;

TEST_CASE("rho at the identity and at the Weyl element") {
  long p = 7;
  WeilRep weil(p);
  CHECK(max_abs_diff(weil.rho(Mat2::identity(p)), CMat::identity(int(p))) <
        1e-12);

  // rho(w) is the normalized psi(xy) kernel.
  CMat w = weil.rho(weyl_element(p));
  cplx aw = gauss_coefficient(Fp(1, p));
  AdditiveCharacter psi(p);
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      CHECK(std::abs(w.at(int(x), int(y)) - aw * psi(x * y)) < 1e-12);
    }
  }
  CHECK_THROWS(weil.rho(Mat2(2, 0, 0, 1, p)));
}

TEST_CASE("rho is unitary everywhere, p in {5,7}") {
  for (long p : {5L, 7L}) {
    WeilRep weil(p);
    for (const Mat2& g : enumerate_sl2(p)) {
      CHECK(unitarity_defect(weil.rho(g)) < 1e-10);
    }
  }
}

TEST_CASE("rho multiplicative: exhaustive p=5, sampled p in {7,11,13}") {
  {
    long p = 5;
    WeilRep weil(p);
    auto group = enumerate_sl2(p);
    std::vector<CMat> mats;
    mats.reserve(group.size());
    for (const Mat2& g : group) mats.push_back(weil.rho(g));
    double worst = 0.0;
    for (size_t i = 0; i < group.size(); ++i) {
      for (size_t j = 0; j < group.size(); ++j) {
        CMat prod = mats[i] * mats[j];
        CMat direct = weil.rho(group[i] * group[j]);
        worst = std::max(worst, max_abs_diff(prod, direct));
      }
    }
    CHECK(worst < 1e-9);
  }
  for (long p : {7L, 11L, 13L}) {
    WeilRep weil(p);
    auto group = enumerate_sl2(p);
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      const Mat2& g1 = group[pick(rng)];
      const Mat2& g2 = group[pick(rng)];
      worst = std::max(
          worst, max_abs_diff(weil.rho(g1) * weil.rho(g2), weil.rho(g1 * g2)));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("rho(-I) is the signed parity operator") {
  for (long p : {5L, 7L}) {
    WeilRep weil(p);
    CMat m = weil.rho(Mat2(-1, 0, 0, -1, p));
    CHECK(max_abs_diff(m * m, CMat::identity(int(p))) < 1e-10);
    double sign = double(legendre(-1, p));
    for (long x = 0; x < p; ++x) {
      for (long y = 0; y < p; ++y) {
        cplx expected = (y == mod_reduce(-x, p)) ? cplx(sign, 0.0) : cplx(0.0, 0.0);
        CHECK(std::abs(m.at(int(x), int(y)) - expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("Egorov identity") {
  // B = I gives zero error.
  {
    WeilRep weil(7);
    CHECK(weil.egorov_error(Mat2::identity(7), Vec2(3, 4, 7)) < 1e-14);
  }
  // Exhaustive over all of SL2(F_5) x V.
  {
    long p = 5;
    WeilRep weil(p);
    double worst = 0.0;
    for (const Mat2& g : enumerate_sl2(p)) {
      for (long a = 0; a < p; ++a) {
        for (long b = 0; b < p; ++b) {
          worst = std::max(worst, weil.egorov_error(g, Vec2(a, b, p)));
        }
      }
    }
    CHECK(worst < 1e-9);
  }
  // Generators x V at p = 7.
  {
    long p = 7;
    WeilRep weil(p);
    for (const Mat2& g : {weyl_element(p), shear_element(p)}) {
      for (long a = 0; a < p; ++a) {
        for (long b = 0; b < p; ++b) {
          CHECK(weil.egorov_error(g, Vec2(a, b, p)) < 1e-9);
        }
      }
    }
  }
  // Property sweep at p = 11.
  {
    long p = 11;
    WeilRep weil(p);
    auto group = enumerate_sl2(p);
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    std::uniform_int_distribution<long> d(0, p - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      CHECK(weil.egorov_error(group[pick(rng)], Vec2(d(rng), d(rng), p)) < 1e-9);
    }
  }
}

TEST_CASE("total kernel equals the operator product on the big cell") {
  long p = 7;
  WeilRep weil(p);
  const HeisenbergRep& heis = weil.heisenberg();
  auto group = enumerate_sl2(p);
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
  std::uniform_int_distribution<long> d(0, p - 1);

  int done = 0;
  while (done < 100) {
    const Mat2& g = group[pick(rng)];
    if (bruhat_cell(g) != BruhatCell::BigCell) continue;
    HeisenbergElement e(d(rng), d(rng), d(rng), p);
    CMat k = weil.total_kernel(g, e);
    CMat prod = weil.rho(g) * heis.pi_heis(e);
    CHECK(max_abs_diff(k, prod) < 1e-10);
    ++done;
  }

  // e = 0 reduces to rho(g).
  const Mat2& w = weyl_element(p);
  CHECK(max_abs_diff(weil.total_kernel(w, h_identity(p)), weil.rho(w)) < 1e-12);
  CHECK_THROWS(weil.total_kernel(Mat2(1, 0, 3, 1, p), h_identity(p)));

  // Its trace is the trace function.
  for (int trial = 0; trial < 20; ++trial) {
    const Mat2& g = group[pick(rng)];
    if (bruhat_cell(g) != BruhatCell::BigCell) continue;
    Vec2 xi(d(rng), d(rng), p);
    cplx via_kernel = weil.total_kernel(g, HeisenbergElement(xi, Fp(0, p))).trace();
    cplx via_trace = weil.trace_rho_pi(g, xi);
    CHECK(std::abs(via_kernel - via_trace) < 1e-10);
  }
}

TEST_CASE("combined rho-pi system is irreducible at p = 5") {
  // Joint commutant of all rho(B) pi(v) products.
  long p = 5;
  WeilRep weil(p);
  std::vector<CMat> ops;
  for (const Mat2& g : enumerate_sl2(p)) {
    CMat r = weil.rho(g);
    for (long a = 0; a < p; ++a) {
      for (long b = 0; b < p; ++b) {
        ops.push_back(r * weil.heisenberg().pi_vector(Vec2(a, b, p)));
      }
    }
  }
  CHECK(commutant_dimension(ops) == 1);
}

TEST_CASE("quantization of trigonometric polynomials") {
  long p = 7;
  WeilRep weil(p);

  // Constant function.
  std::map<std::pair<long, long>, cplx> constant{{{0, 0}, 1.0}};
  CHECK(max_abs_diff(weil.quantize(constant), CMat::identity(int(p))) < 1e-12);

  // Real symbol -> self-adjoint operator.
  std::map<std::pair<long, long>, cplx> real_sym{
      {{1, 2}, cplx(0.3, 0.4)}, {{-1, -2}, cplx(0.3, -0.4)},
      {{2, 0}, cplx(0.5, 0.0)}, {{-2, 0}, cplx(0.5, 0.0)}};
  CMat op = weil.quantize(real_sym);
  CHECK(max_abs_diff(op, op.dagger()) < 1e-12);

  // cos(2 pi x): spectrum is {cos(2 pi k / p)}.
  std::map<std::pair<long, long>, cplx> cosx{{{1, 0}, 0.5}, {{-1, 0}, 0.5}};
  CMat c = weil.quantize(cosx);
  CHECK(max_abs_diff(c, c.dagger()) < 1e-12);
  CHECK(operator_norm(c) <= 1.0 + 1e-9);
}
