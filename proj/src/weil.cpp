#include "torusweil/weil.hpp"

namespace torusweil {

WeilRep::WeilRep(long p) : p_(p), heis_(p) {
  gauss_table_.resize(p);
  gauss_table_[0] = 0.0;
  for (long b = 1; b < p; ++b) {
    gauss_table_[b] = gauss_coefficient(Fp(b, p));
  }
}

cplx WeilRep::gauss_for(const Fp& b) const { return gauss_table_[b.value()]; }

cplx WeilRep::rho_entry(const Mat2& g, long x, long y) const {
  const AdditiveCharacter& psi = heis_.psi();
  Fp fx(x, p_), fy(y, p_);
  if (bruhat_cell(g) == BruhatCell::BigCell) {
    Fp binv = g.b.inverse();
    Fp qxx = -(binv * g.d).half();
    Fp qxy = (binv - g.c + g.a * binv * g.d).half();
    Fp qyy = -(g.a * binv).half();
    return gauss_for(g.b) * psi(qxx * fx * fx + qxy * fx * fy + qyy * fy * fy);
  }
  // g = [[a,0],[r,a^{-1}]]
  Fp ainv = g.a.inverse();
  if (fy != ainv * fx) return cplx(0.0, 0.0);
  Fp quad = -(g.c * ainv).half();
  return double(legendre(g.a)) * psi(quad * fx * fx);
}

CMat WeilRep::rho(const Mat2& g) const {
  if (g.p() != p_) throw std::invalid_argument("rho: modulus mismatch");
  if (!(g.det() == Fp(1, p_))) throw std::domain_error("rho: determinant must be 1");
  CMat m(static_cast<int>(p_));
  if (bruhat_cell(g) == BruhatCell::BigCell) {
    for (long x = 0; x < p_; ++x)
      for (long y = 0; y < p_; ++y) m.at(int(x), int(y)) = rho_entry(g, x, y);
  } else {
    Fp ainv = g.a.inverse();
    for (long x = 0; x < p_; ++x) {
      long y = (ainv * Fp(x, p_)).value();
      m.at(int(x), int(y)) = rho_entry(g, x, y);
    }
  }
  return m;
}

double WeilRep::egorov_error(const Mat2& B, const Vec2& v) const {
  CMat r = rho(B);
  CMat lhs = r * heis_.pi_vector(v) * rho(B.inverse());
  CMat rhs = heis_.pi_vector(B * v);
  return max_abs_diff(lhs, rhs);
}

CMat WeilRep::total_kernel(const Mat2& g, const HeisenbergElement& e) const {
  if (bruhat_cell(g) != BruhatCell::BigCell) {
    throw std::domain_error(
        "total_kernel: closed form only on the big cell (b != 0)");
  }
  const AdditiveCharacter& psi = heis_.psi();
  long q = e.v.x.value();
  Fp r = e.v.y;
  Fp half_rq = (e.v.y * e.v.x).half();
  Fp binv = g.b.inverse();
  Fp qxx = -(binv * g.d).half();
  Fp qxy = (binv - g.c + g.a * binv * g.d).half();
  Fp qyy = -(g.a * binv).half();
  cplx ag = gauss_for(g.b);
  CMat m(static_cast<int>(p_));
  for (long x = 0; x < p_; ++x) {
    Fp fx(x, p_);
    for (long y = 0; y < p_; ++y) {
      // R(g,e,x,y) = R_g(x, y-q) + R_e(y-q, y), the second factor supported
      // on the shifted diagonal automatically.
      Fp fz(y - q, p_);
      Fp rg = qxx * fx * fx + qxy * fx * fz + qyy * fz * fz;
      Fp re = half_rq + r * fz + e.lambda;
      m.at(int(x), int(y)) = ag * psi(rg + re);
    }
  }
  return m;
}

cplx WeilRep::trace_rho_pi(const Mat2& B, const Vec2& xi) const {
  const AdditiveCharacter& psi = heis_.psi();
  long q = xi.x.value();
  Fp r = xi.y;
  Fp half_rq = (xi.y * xi.x).half();
  cplx sum = 0.0;
  for (long x = 0; x < p_; ++x) {
    Fp fz(x - q, p_);
    cplx k_rho = rho_entry(B, x, fz.value());
    if (k_rho == cplx(0.0, 0.0)) continue;
    sum += k_rho * psi(half_rq + r * fz);
  }
  return sum;
}

CMat WeilRep::quantize(const std::map<std::pair<long, long>, cplx>& coeffs) const {
  CMat m(static_cast<int>(p_));
  for (const auto& [xi, a] : coeffs) {
    CMat term = heis_.pi_vector(Vec2(xi.first, xi.second, p_)) * a;
    m = m + term;
  }
  return m;
}

}  // namespace torusweil
