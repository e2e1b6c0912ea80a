#include "torusweil/lagrangian.hpp"

#include <cmath>

namespace torusweil {

std::vector<OrientedLagrangian> enumerate_oriented_lagrangians(long p) {
  require_odd_prime(p);
  std::vector<OrientedLagrangian> out;
  out.reserve(2 * (p + 1));
  for (long s = 0; s < p; ++s) {
    Vec2 dir(1, s, p);
    out.push_back({dir, +1});
    out.push_back({dir, -1});
  }
  Vec2 vert(0, 1, p);
  out.push_back({vert, +1});
  out.push_back({vert, -1});
  return out;
}

Vec2 canonical_direction(const Vec2& v) {
  if (v.is_zero()) throw std::domain_error("canonical_direction: zero vector");
  if (!v.x.is_zero()) return v.scaled(v.x.inverse());
  return v.scaled(v.y.inverse());
}

LagrangianSystem::LagrangianSystem(long p) : p_(p), psi_(p) {}

Vec2 LagrangianSystem::complement_direction(const Vec2& dir) const {
  if (dir.y.is_zero()) return Vec2(0, 1, p_);
  return Vec2(1, 0, p_);
}

int LagrangianSystem::orientation_at(const OrientedLagrangian& L,
                                     const Vec2& v) const {
  // v = t * dir; t from whichever coordinate of dir is nonzero.
  Fp t = L.dir.x.is_zero() ? v.y * L.dir.y.inverse() : v.x * L.dir.x.inverse();
  if (!(L.dir.scaled(t) == v)) {
    throw std::domain_error("orientation_at: vector not on the line");
  }
  int s = legendre(t);
  if (s == 0) throw std::domain_error("orientation_at: zero vector");
  return s * L.orient;
}

void LagrangianSystem::decompose(const Vec2& v, const Vec2& dir, const Vec2& c0,
                                 Fp* t, Fp* x) const {
  Fp det = dir.x * c0.y - c0.x * dir.y;
  Fp dinv = det.inverse();
  *t = (v.x * c0.y - c0.x * v.y) * dinv;
  *x = (dir.x * v.y - v.x * dir.y) * dinv;
}

cplx LagrangianSystem::evaluate(const Vec2& dir, const CVec& values,
                                const HeisenbergElement& e) const {
  Vec2 c0 = complement_direction(dir);
  Fp t, x;
  decompose(e.v, dir, c0, &t, &x);
  // (v, lambda) = (t*dir, mu) . (x*c0, 0) with mu = lambda - omega(t*dir, x*c0)/2.
  Fp mu = e.lambda - omega(dir.scaled(t), c0.scaled(x)).half();
  return psi_(mu) * values[x.value()];
}

CMat LagrangianSystem::right_action(const Vec2& dir,
                                    const HeisenbergElement& h) const {
  Vec2 c0 = complement_direction(dir);
  CMat m(static_cast<int>(p_));
  for (long xi = 0; xi < p_; ++xi) {
    Vec2 pt = c0.scaled(Fp(xi, p_));
    HeisenbergElement moved(pt + h.v, h.lambda + omega(pt, h.v).half());
    Fp t, x;
    decompose(moved.v, dir, c0, &t, &x);
    Fp mu = moved.lambda - omega(dir.scaled(t), c0.scaled(x)).half();
    m.at(int(xi), int(x.value())) = psi_(mu);
  }
  return m;
}

CMat LagrangianSystem::theta_hat(const Vec2& line1, const Vec2& line2) const {
  if (line1 == line2) throw std::domain_error("theta_hat: lines must differ");
  Vec2 c0_1 = complement_direction(line1);
  Vec2 c0_2 = complement_direction(line2);
  CMat m(static_cast<int>(p_));
  for (long y = 0; y < p_; ++y) {
    Vec2 pt = c0_2.scaled(Fp(y, p_));
    for (long s = 0; s < p_; ++s) {
      Vec2 l2 = line2.scaled(Fp(s, p_));
      // (l2, 0) . (pt, 0)
      HeisenbergElement prod(l2 + pt, omega(l2, pt).half());
      Fp t, x;
      decompose(prod.v, line1, c0_1, &t, &x);
      Fp mu = prod.lambda - omega(line1.scaled(t), c0_1.scaled(x)).half();
      m.at(int(y), int(x.value())) += psi_(mu);
    }
  }
  return m;
}

cplx LagrangianSystem::normalization_a(const OrientedLagrangian& L1,
                                       const OrientedLagrangian& L2,
                                       const Vec2& xi2) const {
  if (L1.same_line(L2)) throw std::domain_error("normalization_a: equal lines");
  if (xi2.is_zero()) throw std::domain_error("normalization_a: xi must be nonzero");
  int rho2 = orientation_at(L2, xi2);  // also validates membership in L2
  cplx sum = 0.0;
  for (long t = 1; t < p_; ++t) {
    Vec2 l1 = L1.dir.scaled(Fp(t, p_));
    sum += psi_(omega(l1, xi2).half()) *
           double(legendre(Fp(t, p_)) * L1.orient * rho2);
  }
  return sum / double(p_);
}

CMat LagrangianSystem::theta(const OrientedLagrangian& L1,
                             const OrientedLagrangian& L2) const {
  if (L1.same_line(L2)) {
    CMat m = CMat::identity(int(p_));
    return L1.orient == L2.orient ? m : m * cplx(-1.0, 0.0);
  }
  cplx a = normalization_a(L1, L2, L2.dir);
  return theta_hat(L1.dir, L2.dir) * a;
}

cplx LagrangianSystem::cocycle_C(const Vec2& line1, const Vec2& line2,
                                 const Vec2& line3) const {
  // r(l2) = l3 in L3 with l2 + l3 in L1; linear, r(s*d2) = s*u1*d3 with
  // u1 = -omega(d2,d1)/omega(d3,d1).
  Fp u1 = -(omega(line2, line1) * omega(line3, line1).inverse());
  Fp w23 = omega(line2, line3);
  cplx sum = 0.0;
  for (long s = 0; s < p_; ++s) {
    Fp fs(s, p_);
    sum += psi_((fs * fs * u1 * w23).half());
  }
  return sum;
}

cplx LagrangianSystem::cocycle_D(const Vec2& line1, const OrientedLagrangian& L2,
                                 const Vec2& line3) const {
  Fp u1 = -(omega(L2.dir, line1) * omega(line3, line1).inverse());
  Fp a = u1 * omega(L2.dir, line3);
  int rho_xi = orientation_at(L2, L2.dir);
  cplx sum = 0.0;
  for (long s = 1; s < p_; ++s) {
    Fp fs(s, p_);
    sum += psi_(-(fs * a).half()) * double(legendre(fs) * L2.orient * rho_xi);
  }
  return sum / double(p_);
}

OrientedLagrangian LagrangianSystem::act(const Mat2& g,
                                         const OrientedLagrangian& L) const {
  Vec2 image = g * L.dir;
  Vec2 dir = canonical_direction(image);
  // rho^g(dir) = rho_L(g^{-1} dir)
  Vec2 back = g.inverse() * dir;
  int o = orientation_at(L, back);
  return {dir, o};
}

CMat LagrangianSystem::canonical_weil(const Mat2& g) const {
  if (!(g.det() == Fp(1, p_))) {
    throw std::domain_error("canonical_weil: determinant must be 1");
  }
  OrientedLagrangian base{Vec2(0, 1, p_), +1};
  OrientedLagrangian moved = act(g, base);

  // Translate H_{base} -> H_{moved}: (f^g)(e) = f(g^{-1} e).
  Vec2 c0_m = complement_direction(moved.dir);
  Vec2 base_dir = base.dir;
  Vec2 c0_b = complement_direction(base_dir);
  Mat2 ginv = g.inverse();
  CMat translate(static_cast<int>(p_));
  for (long y = 0; y < p_; ++y) {
    Vec2 pre = ginv * c0_m.scaled(Fp(y, p_));
    Fp t, x;
    decompose(pre, base_dir, c0_b, &t, &x);
    Fp mu = -omega(base_dir.scaled(t), c0_b.scaled(x)).half();
    translate.at(int(y), int(x.value())) = psi_(mu);
  }
  return theta(moved, base) * translate;
}

int LagrangianSystem::model_dimension(const Vec2& dir) const {
  // Trace of the L~-isotypic projector on C[H],
  // P(f)(e) = (1/p^2) sum_{l,mu} psi(-mu) f((l,mu) . e);
  // the trace of a projector is its rank.
  cplx tr = 0.0;
  for (long vx = 0; vx < p_; ++vx) {
    for (long vy = 0; vy < p_; ++vy) {
      Vec2 v(vx, vy, p_);
      for (long lam = 0; lam < p_; ++lam) {
        HeisenbergElement e(v, Fp(lam, p_));
        for (long s = 0; s < p_; ++s) {
          Vec2 l = dir.scaled(Fp(s, p_));
          for (long mu = 0; mu < p_; ++mu) {
            HeisenbergElement le = h_mul(HeisenbergElement(l, Fp(mu, p_)), e);
            if (le.v == e.v && le.lambda == e.lambda) {
              tr += std::conj(psi_(Fp(mu, p_)));
            }
          }
        }
      }
    }
  }
  double val = tr.real() / double(p_ * p_);
  return int(std::lround(val));
}

}  // namespace torusweil
