#include "torusweil/highdim.hpp"

#include <cmath>
#include <cstdlib>

namespace torusweil {

Mat4 Mat4::zero(long p) {
  Mat4 r;
  r.p = p;
  for (auto& row : r.m)
    for (auto& e : row) e = Fp(0, p);
  return r;
}

Mat4 Mat4::identity(long p) {
  Mat4 r = zero(p);
  for (int i = 0; i < 4; ++i) r.m[i][i] = Fp(1, p);
  return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r = zero(p);
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < 4; ++j) {
        r.m[i][j] = r.m[i][j] + m[i][k] * o.m[k][j];
      }
    }
  }
  return r;
}

Mat4 Mat4::transpose() const {
  Mat4 r = zero(p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
  return r;
}

bool Mat4::operator==(const Mat4& o) const {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!(m[i][j] == o.m[i][j])) return false;
  return true;
}

Mat4 symplectic_gram(long p) {
  Mat4 j = Mat4::zero(p);
  j.m[0][2] = Fp(1, p);
  j.m[1][3] = Fp(1, p);
  j.m[2][0] = Fp(-1, p);
  j.m[3][1] = Fp(-1, p);
  return j;
}

bool is_symplectic4(const Mat4& a) {
  Mat4 j = symplectic_gram(a.p);
  return a.transpose() * j * a == j;
}

namespace {

Mat2 transpose_inverse_mod_p(const IntMat2& B, long p) {
  IntMat2 binv = B.inverse();  // throws unless det = +-1
  // transpose of the inverse
  return Mat2(binv.a, binv.c, binv.b, binv.d, p);
}

Mat4 assemble(const Mat2& ul, const Mat2& ur, const Mat2& ll, const Mat2& lr) {
  long p = ul.p();
  Mat4 r = Mat4::zero(p);
  r.m[0][0] = ul.a; r.m[0][1] = ul.b; r.m[1][0] = ul.c; r.m[1][1] = ul.d;
  r.m[0][2] = ur.a; r.m[0][3] = ur.b; r.m[1][2] = ur.c; r.m[1][3] = ur.d;
  r.m[2][0] = ll.a; r.m[2][1] = ll.b; r.m[3][0] = ll.c; r.m[3][1] = ll.d;
  r.m[2][2] = lr.a; r.m[2][3] = lr.b; r.m[3][2] = lr.c; r.m[3][3] = lr.d;
  return r;
}

}  // namespace

Mat4 block_element(const IntMat2& B, long p) {
  long dt = B.det();
  if (dt != 1 && dt != -1) {
    throw std::domain_error("block_element: det B must be +-1 over Z");
  }
  require_odd_prime(p);
  Mat2 zero(0, 0, 0, 0, p);
  Mat2 upper(B.a, B.b, B.c, B.d, p);
  return assemble(upper, zero, zero, transpose_inverse_mod_p(B, p));
}

Mat4 antidiag_element(const Mat2& C) {
  long p = C.p();
  if (C.det().is_zero()) {
    throw std::domain_error("antidiag_element: C must be invertible");
  }
  Mat2 zero(0, 0, 0, 0, p);
  Fp dinv = C.det().inverse();
  // inverse of C, then transpose, then negate
  Mat2 cinv(C.d * dinv, -C.b * dinv, -C.c * dinv, C.a * dinv);
  Mat2 neg_t_cinv(-cinv.a, -cinv.c, -cinv.b, -cinv.d);
  return assemble(zero, C, neg_t_cinv, zero);
}

bool block_is_ergodic(const IntMat2& B) {
  double t = double(B.trace());
  double d = double(B.det());
  double disc = t * t - 4.0 * d;
  const double margin = 1e-9;
  if (disc >= 0.0) {
    double s = std::sqrt(disc);
    for (double lam : {(t + s) / 2.0, (t - s) / 2.0}) {
      if (std::abs(std::abs(lam) - 1.0) < margin) return false;
    }
    return true;
  }
  // Complex pair with |lambda|^2 = det; on the unit circle iff det = 1.
  return std::abs(d - 1.0) > margin;
}

CMat rho_block(const IntMat2& B, long p) {
  require_odd_prime(p);
  long dt = mod_reduce(B.det(), p);
  if (dt == 0) throw std::domain_error("rho_block: det B = 0 mod p");
  int sign = legendre(dt, p);
  // Inverse of B mod p (det need not be +-1 here, just invertible).
  Fp det(B.det(), p);
  Fp dinv = det.inverse();
  Mat2 binv(Fp(B.d, p) * dinv, Fp(-B.b, p) * dinv, Fp(-B.c, p) * dinv,
            Fp(B.a, p) * dinv);
  CMat m(static_cast<int>(p * p));
  for (long x1 = 0; x1 < p; ++x1) {
    for (long x2 = 0; x2 < p; ++x2) {
      Vec2 x(x1, x2, p);
      Vec2 y = binv * x;
      m.at(int(x1 * p + x2), int(y.x.value() * p + y.y.value())) = double(sign);
    }
  }
  return m;
}

cplx counterexample_value(const IntMat2& B, long p, const Vec2& xi) {
  require_odd_prime(p);
  if (xi.is_zero()) {
    throw std::domain_error("counterexample_value: xi must be nonzero");
  }
  (void)B;  // the value is independent of B; B fixes the Lagrangian plane
  long n = p * p;
  double amp = 1.0 / double(p);
  CVec phi(n, cplx(amp, 0.0));
  // pi(xi) phi (x) = phi(x + xi)
  cplx val = 0.0;
  for (long x1 = 0; x1 < p; ++x1) {
    for (long x2 = 0; x2 < p; ++x2) {
      long y1 = mod_reduce(x1 + xi.x.value(), p);
      long y2 = mod_reduce(x2 + xi.y.value(), p);
      val += std::conj(phi[x1 * p + x2]) * phi[y1 * p + y2];
    }
  }
  return val;
}

namespace {

Mat4 assemble_diag(const Mat2& m) {
  long p = m.p();
  Fp dinv = m.det().inverse();
  Mat2 minv(m.d * dinv, -m.b * dinv, -m.c * dinv, m.a * dinv);
  Mat2 t_minv(minv.a, minv.c, minv.b, minv.d);
  Mat4 r = Mat4::zero(p);
  r.m[0][0] = m.a; r.m[0][1] = m.b; r.m[1][0] = m.c; r.m[1][1] = m.d;
  r.m[2][2] = t_minv.a; r.m[2][3] = t_minv.b;
  r.m[3][2] = t_minv.c; r.m[3][3] = t_minv.d;
  return r;
}

}  // namespace

CentralizerReport centralizer_structure(const IntMat2& B, long p) {
  if (!is_hyperbolic(B)) {
    throw std::domain_error("centralizer_structure: B must be hyperbolic");
  }
  require_odd_prime(p);
  Mat2 Bbar(B.a, B.b, B.c, B.d, p);
  Mat4 A = block_element(B, p);

  CentralizerReport report;
  std::vector<Mat2> diag_ms, anti_cs;
  Mat2 tB(Bbar.a, Bbar.c, Bbar.b, Bbar.d);
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      for (long c = 0; c < p; ++c) {
        for (long d = 0; d < p; ++d) {
          Mat2 m(a, b, c, d, p);
          if (m.det().is_zero()) continue;
          if (m * Bbar == Bbar * m) diag_ms.push_back(m);
          // antidiagonal (0,C;-tC^{-1},0) commutes with A iff C = B C tB
          if (Bbar * m * tB == m) anti_cs.push_back(m);
        }
      }
    }
  }
  report.diag_count = long(diag_ms.size());
  report.antidiag_count = long(anti_cs.size());

  // Witness: one block-diagonal and one anti-diagonal centralizer element
  // that do not commute with each other.
  for (const Mat2& m : diag_ms) {
    Mat4 g1 = assemble_diag(m);
    if (!(g1 * A == A * g1)) continue;
    for (const Mat2& c : anti_cs) {
      Mat4 g2 = antidiag_element(c);
      if (!(g2 * A == A * g2)) continue;
      if (g1 * g2 != g2 * g1) {
        report.witness_found = true;
        report.g1 = g1;
        report.g2 = g2;
        return report;
      }
    }
  }
  return report;
}

}  // namespace torusweil
