#include "torusweil/heisenberg.hpp"

namespace torusweil {

namespace {
void check_same_p(const HeisenbergElement& e, const HeisenbergElement& f) {
  if (e.p() != f.p()) {
    throw std::invalid_argument("Heisenberg elements have different moduli");
  }
}
}  // namespace

HeisenbergElement h_mul(const HeisenbergElement& e, const HeisenbergElement& f) {
  check_same_p(e, f);
  return {e.v + f.v, e.lambda + f.lambda + omega(e.v, f.v).half()};
}

HeisenbergElement h_inverse(const HeisenbergElement& e) {
  return {-e.v, -e.lambda};
}

HeisenbergElement h_identity(long p) { return HeisenbergElement(0, 0, 0, p); }

HeisenbergRep::HeisenbergRep(long p) : p_(p), psi_(p) {}

CMat HeisenbergRep::pi_heis(const HeisenbergElement& e) const {
  if (e.p() != p_) throw std::invalid_argument("pi_heis: modulus mismatch");
  long q = e.v.x.value();
  long r = e.v.y.value();
  CMat m(static_cast<int>(p_));
  Fp half_rq = (e.v.y * e.v.x).half();
  for (long x = 0; x < p_; ++x) {
    long y = (x + q) % p_;
    m.at(int(x), int(y)) = psi_(half_rq + Fp(r * x, p_) + e.lambda);
  }
  return m;
}

CMat HeisenbergRep::pi_vector(const Vec2& v) const {
  return pi_heis(HeisenbergElement(v, Fp(0, p_)));
}

CVec HeisenbergRep::apply(const HeisenbergElement& e, const CVec& f) const {
  if (long(f.size()) != p_) throw std::invalid_argument("apply: bad state size");
  long q = e.v.x.value();
  long r = e.v.y.value();
  Fp half_rq = (e.v.y * e.v.x).half();
  CVec out(p_);
  for (long x = 0; x < p_; ++x) {
    out[x] = psi_(half_rq + Fp(r * x, p_) + e.lambda) * f[(x + q) % p_];
  }
  return out;
}

CVec HeisenbergRep::apply_vector(const Vec2& v, const CVec& f) const {
  return apply(HeisenbergElement(v, Fp(0, p_)), f);
}

int heisenberg_commutant_dimension(long p) {
  HeisenbergRep rep(p);
  std::vector<CMat> ops;
  ops.reserve(size_t(p) * p);
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      ops.push_back(rep.pi_vector(Vec2(a, b, p)));
    }
  }
  return commutant_dimension(ops);
}

}  // namespace torusweil
