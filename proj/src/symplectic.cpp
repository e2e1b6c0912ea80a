#include "torusweil/symplectic.hpp"

#include <cstdlib>
#include <stdexcept>

namespace torusweil {

Fp omega(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

Fp omega(const FpVec& u, const FpVec& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw std::invalid_argument("omega: dimension mismatch");
  }
  size_t n = u.size() / 2;
  Fp acc(0, u[0].modulus());
  for (size_t i = 0; i < n; ++i) {
    acc = acc + u[i] * v[n + i] - u[n + i] * v[i];
  }
  return acc;
}

IntMat2 IntMat2::inverse() const {
  long dt = det();
  if (dt != 1 && dt != -1) {
    throw std::domain_error("IntMat2::inverse: determinant not a unit");
  }
  return {dt * d, -dt * b, -dt * c, dt * a};
}

Mat2 reduce_mod_p(const IntMat2& m, long p) {
  if (m.det() != 1) {
    throw std::domain_error("reduce_mod_p: integer determinant must be 1");
  }
  require_odd_prime(p);
  return Mat2(m.a, m.b, m.c, m.d, p);
}

bool is_hyperbolic(const IntMat2& m) {
  if (m.det() != 1) throw std::domain_error("is_hyperbolic: det must be 1");
  return std::labs(m.trace()) > 2;
}

BruhatCell bruhat_cell(const Mat2& g) {
  return g.b.is_zero() ? BruhatCell::LowerBorel : BruhatCell::BigCell;
}

std::vector<Mat2> enumerate_sl2(long p) {
  require_odd_prime(p);
  std::vector<Mat2> out;
  out.reserve(size_t(p) * (p * p - 1));
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      for (long c = 0; c < p; ++c) {
        if (a != 0) {
          // d determined by ad - bc = 1.
          long d = (mod_inverse(a, p) * mod_reduce(1 + b * c, p)) % p;
          out.emplace_back(a, b, c, d, p);
        } else {
          if (mod_reduce(b * c, p) != mod_reduce(-1, p)) continue;
          for (long d = 0; d < p; ++d) out.emplace_back(a, b, c, d, p);
        }
      }
    }
  }
  return out;
}

Mat2 weyl_element(long p) { return Mat2(0, 1, -1, 0, p); }
Mat2 shear_element(long p) { return Mat2(1, 1, 0, 1, p); }

long element_order(const Mat2& g) {
  Mat2 id = Mat2::identity(g.p());
  Mat2 acc = g;
  long k = 1;
  long cap = g.p() * (g.p() * g.p() - 1) + 1;
  while (acc != id) {
    acc = acc * g;
    ++k;
    if (k > cap) throw std::logic_error("element_order: exceeded group order");
  }
  return k;
}

}  // namespace torusweil
