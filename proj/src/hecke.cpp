#include "torusweil/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "torusweil/parallel.hpp"

namespace torusweil {

namespace {

std::tuple<long, long, long, long> key_of(const Mat2& m) {
  return {m.a.value(), m.b.value(), m.c.value(), m.d.value()};
}

}  // namespace

HeckeTorus hecke_torus(const IntMat2& A, long p) {
  if (!is_hyperbolic(A)) throw NotHyperbolicError();
  require_odd_prime(p);
  long disc = mod_reduce(A.trace() * A.trace() - 4, p);
  if (disc == 0) throw ParabolicPrimeError(p);

  Mat2 Abar = reduce_mod_p(A, p);
  // Brute-force scan of SL2(F_p) without materializing the group.
  std::vector<Mat2> commuting;
  auto consider = [&](long a, long b, long c, long d) {
    Mat2 m(a, b, c, d, p);
    if (m * Abar == Abar * m) commuting.push_back(m);
  };
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      for (long c = 0; c < p; ++c) {
        if (a != 0) {
          consider(a, b, c, (mod_inverse(a, p) * mod_reduce(1 + b * c, p)) % p);
        } else if (mod_reduce(b * c, p) == mod_reduce(-1, p)) {
          for (long d = 0; d < p; ++d) consider(a, b, c, d);
        }
      }
    }
  }

  HeckeTorus T;
  T.p = p;
  T.A = Abar;
  T.kind = legendre(disc, p) == 1 ? TorusKind::Split : TorusKind::Inert;
  long expected = T.kind == TorusKind::Split ? p - 1 : p + 1;
  if (long(commuting.size()) != expected) {
    throw std::logic_error("hecke_torus: centralizer order " +
                           std::to_string(commuting.size()) + ", expected " +
                           std::to_string(expected));
  }

  // Cyclicity certificate: find a generator and store the group in power
  // order.
  std::map<std::tuple<long, long, long, long>, bool> members;
  for (const Mat2& B : commuting) members[key_of(B)] = true;
  for (const Mat2& cand : commuting) {
    std::vector<Mat2> powers;
    powers.reserve(expected);
    Mat2 acc = Mat2::identity(p);
    bool ok = true;
    for (long k = 0; k < expected; ++k) {
      if (!members.count(key_of(acc))) {
        ok = false;
        break;
      }
      powers.push_back(acc);
      acc = acc * cand;
    }
    if (ok && acc == Mat2::identity(p) && long(powers.size()) == expected) {
      // check all distinct
      std::map<std::tuple<long, long, long, long>, bool> seen;
      for (const Mat2& m : powers) seen[key_of(m)] = true;
      if (long(seen.size()) == expected) {
        T.generator = cand;
        T.elements = std::move(powers);
        return T;
      }
    }
  }
  throw std::logic_error("hecke_torus: no generator found (torus not cyclic?)");
}

HeckeAnalysis::HeckeAnalysis(const HeckeTorus& T)
    : torus_(T), weil_(std::make_shared<WeilRep>(T.p)) {
  long p = T.p;
  // Deterministic seed vector with nonzero component in every eigenspace
  // (retried with a shifted seed if a projection ever comes out null).
  CVec u(p);
  for (long i = 0; i < p; ++i) {
    u[i] = cplx(std::cos(0.7 * double(i + 1)), std::sin(1.3 * double(i * i + 2)));
  }
  normalize(u);
  seed_images_.reserve(T.elements.size());
  element_traces_.reserve(T.elements.size());
  for (const Mat2& B : T.elements) {
    seed_images_.push_back(weil_->rho(B) * u);
    cplx tr = 0.0;
    for (long x = 0; x < p; ++x) tr += weil_->rho_entry(B, x, x);
    element_traces_.push_back(tr);
  }
}

const std::vector<CMat>& HeckeAnalysis::rho_cache() const {
  if (rho_mats_.empty()) {
    rho_mats_.reserve(torus_.elements.size());
    for (const Mat2& B : torus_.elements) rho_mats_.push_back(weil_->rho(B));
  }
  return rho_mats_;
}

CMat HeckeAnalysis::projector(const CyclicCharacter& chi) const {
  if (chi.order() != torus_.order()) {
    throw std::invalid_argument("projector: character order mismatch");
  }
  long n = torus_.order();
  const std::vector<CMat>& mats = rho_cache();
  CMat P(static_cast<int>(torus_.p));
  for (long k = 0; k < n; ++k) {
    P = P + mats[k] * std::conj(chi.at_power(k));
  }
  return P * (1.0 / double(n));
}

int HeckeAnalysis::projector_rank(const CyclicCharacter& chi) const {
  long n = torus_.order();
  cplx tr = 0.0;
  for (long k = 0; k < n; ++k) {
    tr += std::conj(chi.at_power(k)) * element_traces_[k];
  }
  return int(std::lround(tr.real() / double(n)));
}

CVec HeckeAnalysis::eigenvector(const CyclicCharacter& chi) const {
  if (projector_rank(chi) != 1) throw MultiplicityTwoError();
  long n = torus_.order();
  long p = torus_.p;
  CVec v(p, cplx(0.0, 0.0));
  for (long k = 0; k < n; ++k) {
    cplx w = std::conj(chi.at_power(k));
    for (long i = 0; i < p; ++i) v[i] += w * seed_images_[k][i];
  }
  double nv = norm(v);
  if (nv < 1e-8) {
    // Seed happened to be orthogonal to the line; project a basis vector.
    const std::vector<CMat>& mats = rho_cache();
    for (long basis = 0; basis < p && nv < 1e-8; ++basis) {
      std::fill(v.begin(), v.end(), cplx(0.0, 0.0));
      for (long k = 0; k < n; ++k) {
        cplx w = std::conj(chi.at_power(k));
        for (long i = 0; i < p; ++i) v[i] += w * mats[k].at(int(i), int(basis));
      }
      nv = norm(v);
    }
  }
  normalize(v);
  return v;
}

WignerValue HeckeAnalysis::wigner(const CyclicCharacter& chi,
                                  const Vec2& xi) const {
  if (xi.is_zero()) throw std::domain_error("wigner: xi must be nonzero");
  CVec v = eigenvector(chi);
  CVec pv = weil_->heisenberg().apply_vector(xi, v);
  cplx val = dot(v, pv);
  return {chi, xi, val, val * std::sqrt(double(torus_.p)) / 2.0};
}

cplx HeckeAnalysis::restated_sum(const CyclicCharacter& chi,
                                 const Vec2& xi) const {
  long n = torus_.order();
  cplx sum = 0.0;
  for (long k = 0; k < n; ++k) {
    sum += trace_function(*weil_, torus_.elements[k], xi) * chi.at_power(k);
  }
  return sum;
}

CMat HeckeAnalysis::averaged_operator(const Vec2& xi) const {
  const std::vector<CMat>& mats = rho_cache();
  long n = torus_.order();
  CMat acc(static_cast<int>(torus_.p));
  CMat pixi = weil_->heisenberg().pi_vector(xi);
  for (long k = 0; k < n; ++k) {
    acc = acc + mats[k] * pixi * mats[k].dagger();
  }
  return acc * (1.0 / double(n));
}

CMat HeckeAnalysis::averaged_operator_orbit(const Vec2& xi) const {
  long n = torus_.order();
  CMat acc(static_cast<int>(torus_.p));
  for (long k = 0; k < n; ++k) {
    acc = acc + weil_->heisenberg().pi_vector(torus_.elements[k] * xi);
  }
  return acc * (1.0 / double(n));
}

cplx trace_function(const WeilRep& weil, const Mat2& B, const Vec2& xi) {
  return weil.trace_rho_pi(B, xi);
}

SplitDiagonalization diagonalize_split(const HeckeTorus& T) {
  if (T.kind != TorusKind::Split) throw NotSplitError();
  long p = T.p;
  long t = T.A.trace().value();
  long disc = mod_reduce(t * t - 4, p);
  long sq = -1;
  for (long s = 1; s < p; ++s) {
    if ((s * s) % p == disc) {
      sq = s;
      break;
    }
  }
  if (sq < 0) throw NotSplitError();
  Fp alpha = (Fp(t, p) + Fp(sq, p)).half();
  Fp beta = (Fp(t, p) - Fp(sq, p)).half();

  auto eigvec = [&](const Fp& lam) -> Vec2 {
    // kernel vector of A - lam
    if (!T.A.b.is_zero()) return Vec2(T.A.b, lam - T.A.a);
    if (!T.A.c.is_zero()) return Vec2(lam - T.A.d, T.A.c);
    // A already diagonal
    return (T.A.a == lam) ? Vec2(1, 0, p) : Vec2(0, 1, p);
  };

  Vec2 va = eigvec(alpha);
  Vec2 vb = eigvec(beta);
  // M has eigenvector columns; scale second column so det M = 1, then
  // S = M^{-1} conjugates A to diag(alpha, beta).
  Fp det = va.x * vb.y - vb.x * va.y;
  Fp s = det.inverse();
  vb = vb.scaled(s);
  Mat2 M(va.x, vb.x, va.y, vb.y);
  SplitDiagonalization out{M.inverse()};
  Mat2 check = out.S * T.A * out.S.inverse();
  if (!check.b.is_zero() || !check.c.is_zero()) {
    throw std::logic_error("diagonalize_split: conjugation failed");
  }
  return out;
}

cplx split_formula(const HeckeTorus& T, const SplitDiagonalization& diag,
                   const CyclicCharacter& chi, const Vec2& xi) {
  if (T.kind != TorusKind::Split) throw NotSplitError();
  long p = T.p;
  AdditiveCharacter psi(p);
  Vec2 sxi = diag.S * xi;
  Fp lm = sxi.x * sxi.y;
  CyclicCharacter c = diag.conjugate_characters ? chi.conj() : chi;
  cplx sum = 0.0;
  for (long k = 0; k < T.order(); ++k) {
    Fp a = diag.iota(T.elements[k]);
    if (a.value() == 1) continue;  // pole of (a+1)/(a-1); contributes 0
    Fp arg = (lm * (a + Fp(1, p)) * (a - Fp(1, p)).inverse()).half();
    sum += psi(arg) * double(legendre(a)) * c.at_power(k);
  }
  return sum / double(T.order());
}

SplitDiagonalization aligned_split_diagonalization(const HeckeTorus& T,
                                                   const HeckeAnalysis& an,
                                                   const Vec2& probe_xi) {
  SplitDiagonalization d1 = diagonalize_split(T);
  SplitDiagonalization d2 = d1;
  d2.conjugate_characters = true;
  CyclicCharacter probe(T.order(), 1);
  double w = std::abs(an.wigner(probe, probe_xi).value);
  double e1 = std::abs(std::abs(split_formula(T, d1, probe, probe_xi)) - w);
  double e2 = std::abs(std::abs(split_formula(T, d2, probe, probe_xi)) - w);
  return e1 <= e2 ? d1 : d2;
}

LNormPair l_norm_identity(const HeckeAnalysis& an, const Vec2& xi, long N,
                          double tuple_budget) {
  if (N < 1) throw std::invalid_argument("l_norm_identity: N >= 1 required");
  const HeckeTorus& T = an.torus();
  long m = T.order();
  double tuples = std::pow(double(m), double(2 * N));
  if (tuples > tuple_budget) {
    throw std::domain_error("l_norm_identity: orbit tuple count exceeds budget");
  }

  CMat av = an.averaged_operator(xi);
  CMat g = av.dagger() * av;
  CMat acc = g;
  for (long i = 1; i < N; ++i) acc = acc * g;
  double lhs = acc.trace().real();

  // Orbit images (multiset) and the zero-sum tuple sum.
  long p = T.p;
  AdditiveCharacter psi(p);
  std::vector<Vec2> orbit;
  orbit.reserve(m);
  for (const Mat2& B : T.elements) orbit.push_back(B * xi);

  long tuple_len = 2 * N;
  std::vector<long> idx(tuple_len, 0);
  cplx rhs_sum = 0.0;
  while (true) {
    Fp sx(0, p), sy(0, p);
    for (long i = 0; i < tuple_len; ++i) {
      sx = sx + orbit[idx[i]].x;
      sy = sy + orbit[idx[i]].y;
    }
    if (sx.is_zero() && sy.is_zero()) {
      Fp phase(0, p);
      for (long i = 0; i < tuple_len; ++i) {
        for (long j = i + 1; j < tuple_len; ++j) {
          phase = phase + omega(orbit[idx[i]], orbit[idx[j]]);
        }
      }
      rhs_sum += psi.at_half(phase);
    }
    long pos = tuple_len - 1;
    while (pos >= 0 && ++idx[pos] == m) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  cplx rhs = rhs_sum * double(p) / std::pow(double(m), double(2 * N));
  return {lhs, rhs};
}

std::vector<BoundRow> kr_bound_sweep(const IntMat2& A, long pmin, long pmax,
                                     double slack, int threads) {
  long disc = A.trace() * A.trace() - 4;
  std::vector<long> ps;
  for (long p : primes_in_range(std::max(pmin, 5L), pmax)) {
    if (mod_reduce(disc, p) == 0) continue;
    ps.push_back(p);
  }
  std::vector<BoundRow> rows(ps.size());
  parallel_for(
      ps.size(),
      [&](size_t i) {
        long p = ps[i];
        HeckeTorus T = hecke_torus(A, p);
        HeckeAnalysis an(T);
        double scale = std::sqrt(double(p)) / 2.0;
        double sharp_scale = double(T.order()) / (2.0 * std::sqrt(double(p)));
        double mx = 0.0;
        for (const CyclicCharacter& chi : cyclic_characters(T.order())) {
          if (chi.is_quadratic()) continue;
          CVec v = an.eigenvector(chi);
          for (long l = 0; l < p; ++l) {
            for (long mcoord = 0; mcoord < p; ++mcoord) {
              if (l == 0 && mcoord == 0) continue;
              Vec2 xi(l, mcoord, p);
              CVec pv = an.weil().heisenberg().apply_vector(xi, v);
              mx = std::max(mx, std::abs(dot(v, pv)));
            }
          }
        }
        BoundRow row;
        row.p = p;
        row.kind = T.kind;
        row.max_normalized = mx * scale;
        row.max_sharp = mx * sharp_scale;
        row.pass_asymptotic = row.max_normalized <= 1.0 + slack;
        row.pass_sharp = row.max_sharp <= 1.0 + slack;
        rows[i] = row;
      },
      threads);
  return rows;
}

double arcsine_cdf(double x) {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 0.5 + std::asin(x) / kPi;
}

double ks_distance_to_arcsine(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  size_t n = samples.size();
  if (n == 0) return 0.0;
  double ks = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double f = arcsine_cdf(samples[i]);
    ks = std::max(ks, std::abs(double(i + 1) / double(n) - f));
    ks = std::max(ks, std::abs(double(i) / double(n) - f));
  }
  return ks;
}

std::vector<SatoTateRow> sato_tate(const IntMat2& A, long pmin, long pmax,
                                   long xi_l, long xi_m, int threads) {
  long disc = A.trace() * A.trace() - 4;
  std::vector<long> ps;
  for (long p : primes_in_range(std::max(pmin, 5L), pmax)) {
    if (mod_reduce(disc, p) == 0) continue;
    if (mod_reduce(xi_l, p) == 0 && mod_reduce(xi_m, p) == 0) continue;
    ps.push_back(p);
  }
  std::vector<SatoTateRow> rows(ps.size());
  parallel_for(
      ps.size(),
      [&](size_t i) {
        long p = ps[i];
        HeckeTorus T = hecke_torus(A, p);
        HeckeAnalysis an(T);
        Vec2 xi(xi_l, xi_m, p);
        double scale = std::sqrt(double(p)) / 2.0;
        SatoTateRow row;
        row.p = p;
        row.torus_order = T.order();
        row.kind = T.kind;
        for (const CyclicCharacter& chi : cyclic_characters(T.order())) {
          if (chi.is_quadratic()) continue;
          CVec v = an.eigenvector(chi);
          CVec pv = an.weil().heisenberg().apply_vector(xi, v);
          cplx w = dot(v, pv) * scale;
          row.normalized.push_back(w);
          row.max_abs = std::max(row.max_abs, std::abs(w));
          row.max_im = std::max(row.max_im, std::abs(w.imag()));
          row.clipped.push_back(std::clamp(w.real(), -1.0, 1.0));
        }
        row.ks = ks_distance_to_arcsine(row.clipped);
        rows[i] = std::move(row);
      },
      threads);
  return rows;
}

}  // namespace torusweil
