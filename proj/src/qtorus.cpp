#include "torusweil/qtorus.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace torusweil {

namespace {

// Integer power of a unit complex number, negative exponents via conjugation.
cplx unit_pow(cplx z, long e) {
  if (e < 0) {
    z = std::conj(z);
    e = -e;
  }
  cplx acc(1.0, 0.0);
  while (e > 0) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

}  // namespace

RationalPlanck::RationalPlanck(long M_, long N_) : M(M_), N(N_) {
  if (N < 1) throw std::invalid_argument("RationalPlanck: N must be >= 1");
  if (std::gcd(std::labs(M), N) != 1) {
    throw std::invalid_argument("RationalPlanck: gcd(M, N) must be 1");
  }
}

TwistedCharacter::TwistedCharacter(const RationalPlanck& h, cplx q1, cplx q2)
    : M_(h.M), N_(h.N), q1_(q1), q2_(q2) {
  if (std::abs(std::abs(q1) - 1.0) > 1e-9 || std::abs(std::abs(q2) - 1.0) > 1e-9) {
    throw std::invalid_argument("TwistedCharacter: basis values must be unit");
  }
}

cplx TwistedCharacter::at(long m, long n) const {
  double sign = ((M_ * N_) % 2 != 0) && ((m * n) % 2 != 0) ? -1.0 : 1.0;
  return sign * unit_pow(q1_, m) * unit_pow(q2_, n);
}

double TwistedCharacter::law_defect(long box) const {
  double mx = 0.0;
  long mn = M_ * N_;
  for (long m = -box; m <= box; ++m) {
    for (long n = -box; n <= box; ++n) {
      for (long m2 = -box; m2 <= box; ++m2) {
        for (long n2 = -box; n2 <= box; ++n2) {
          long w = m * n2 - n * m2;
          double tw = (mn * w) % 2 != 0 ? -1.0 : 1.0;
          cplx lhs = at(m + m2, n + n2);
          cplx rhs = tw * at(m, n) * at(m2, n2);
          mx = std::max(mx, std::abs(lhs - rhs));
        }
      }
    }
  }
  return mx;
}

double TwistedCharacter::invariance_defect(const IntMat2& B, long box) const {
  IntMat2 binv = B.inverse();
  double mx = 0.0;
  for (long m = -box; m <= box; ++m) {
    for (long n = -box; n <= box; ++n) {
      long mm = binv.a * m + binv.b * n;
      long nn = binv.c * m + binv.d * n;
      mx = std::max(mx, std::abs(at(mm, nn) / at(m, n) - cplx(1.0, 0.0)));
    }
  }
  return mx;
}

cplx q_o_value(const RationalPlanck& h, long m, long n) {
  long e = h.M * h.N * (m * n + m + n);
  return (e % 2 != 0) ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);
}

TwistedCharacter fixed_twisted_character(const RationalPlanck& h) {
  cplx sign = (h.M * h.N) % 2 != 0 ? cplx(-1.0, 0.0) : cplx(1.0, 0.0);
  return TwistedCharacter(h, sign, sign);
}

std::vector<TwistedCharacter> invariant_character_search(const RationalPlanck& h,
                                                         long box) {
  std::vector<TwistedCharacter> found;
  long order = 2 * h.N;
  IntMat2 S{0, 1, -1, 0};
  IntMat2 T{1, 1, 0, 1};
  for (long j1 = 0; j1 < order; ++j1) {
    for (long j2 = 0; j2 < order; ++j2) {
      cplx q1 = std::polar(1.0, 2.0 * kPi * double(j1) / double(order));
      cplx q2 = std::polar(1.0, 2.0 * kPi * double(j2) / double(order));
      TwistedCharacter q(h, q1, q2);
      if (q.invariance_defect(S, box) < 1e-9 &&
          q.invariance_defect(T, box) < 1e-9) {
        found.push_back(q);
      }
    }
  }
  return found;
}

TorusRep::TorusRep(const RationalPlanck& h, int n, Scaling scaling)
    : h_(h), n_(n), scaling_(scaling) {
  if (n != 1 && n != 2) throw std::invalid_argument("TorusRep: n must be 1 or 2");
  dim_ = 1;
  for (int i = 0; i < n; ++i) dim_ *= h.N;
}

cplx TorusRep::zeta_pow(long e) const {
  long two_n = 2 * h_.N;
  long r = mod_reduce(e, two_n);
  return std::polar(1.0, 2.0 * kPi * double(r) / double(two_n));
}

cplx TorusRep::pair_phase(long m, long n) const {
  if (scaling_ == Scaling::TwoDim) {
    // (-1)^{M(m+n)} e^{pi i M m n / N}
    return zeta_pow(h_.M * h_.N * (m + n) + h_.M * m * n);
  }
  // ((-1)^eps e^{pi i M / N})^{mn}
  return zeta_pow((h_.epsilon() * h_.N + h_.M) * m * n);
}

CMat TorusRep::op(long m, long n) const { return op(std::vector<long>{m, n}); }

CMat TorusRep::op(const std::vector<long>& xi) const {
  long N = h_.N;
  if (long(xi.size()) != 2 * n_) {
    throw std::invalid_argument("TorusRep::op: expected 2n coordinates");
  }
  CMat out(static_cast<int>(dim_));
  if (n_ == 1) {
    long m = xi[0], nn = xi[1];
    cplx ph = pair_phase(m, nn);
    for (long x = 0; x < N; ++x) {
      long y = mod_reduce(x + m, N);
      // (U^m V^n f)(x) = v(x+m)^n f(x+m), v(x) = e^{-2 pi i M x / N}
      out.at(int(x), int(y)) = ph * zeta_pow(-2 * h_.M * (x + m) * nn);
    }
    return out;
  }
  long m1 = xi[0], m2 = xi[1], n1 = xi[2], n2 = xi[3];
  cplx ph = pair_phase(m1, n1) * pair_phase(m2, n2);
  for (long x1 = 0; x1 < N; ++x1) {
    for (long x2 = 0; x2 < N; ++x2) {
      long y1 = mod_reduce(x1 + m1, N);
      long y2 = mod_reduce(x2 + m2, N);
      cplx val = ph * zeta_pow(-2 * h_.M * ((x1 + m1) * n1 + (x2 + m2) * n2));
      out.at(int(x1 * N + x2), int(y1 * N + y2)) = val;
    }
  }
  return out;
}

cplx TorusRep::attached_scalar(const std::vector<long>& xi) const {
  std::vector<long> scaled(xi);
  for (long& c : scaled) c *= h_.N;
  CMat m = op(scaled);
  cplx lambda = m.at(0, 0);
  double defect = max_abs_diff(m, CMat::identity(int(dim_)) * lambda);
  if (defect > 1e-9) {
    throw std::logic_error("attached_scalar: operator is not scalar");
  }
  return lambda;
}

double semiclassical_defect(const LatticePoly& f, const LatticePoly& g, long N) {
  RationalPlanck h(1, N);
  TorusRep rep(h, 1, TorusRep::Scaling::TwoDim);
  CMat of(static_cast<int>(N)), og(static_cast<int>(N));
  for (const auto& [xi, a] : f) of = of + rep.op(xi.first, xi.second) * a;
  for (const auto& [xi, a] : g) og = og + rep.op(xi.first, xi.second) * a;

  LatticePoly bracket;
  for (const auto& [xi, a] : f) {
    for (const auto& [eta, b] : g) {
      long w = xi.first * eta.second - xi.second * eta.first;
      if (w == 0) continue;
      std::pair<long, long> sum{xi.first + eta.first, xi.second + eta.second};
      bracket[sum] += a * b * 4.0 * kPi * kPi * double(w);
    }
  }
  CMat opb(static_cast<int>(N));
  for (const auto& [xi, c] : bracket) opb = opb + rep.op(xi.first, xi.second) * c;

  CMat comm = of * og - og * of;
  CMat defect = comm * cplx(0.0, 2.0 * kPi * double(N)) - opb;
  return operator_norm(defect);
}

}  // namespace torusweil
