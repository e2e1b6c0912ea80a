#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace torusweil {

using cplx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_prime(long n);

// Throws std::invalid_argument unless p is an odd prime >= 5.
void require_odd_prime(long p);

long mod_reduce(long a, long m);
long mod_pow(long base, long exp, long m);
long mod_inverse(long a, long m);

/// Residue class modulo a prime, stored as the canonical lift in [0, p).
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long value, long p) : v_(mod_reduce(value, p)), p_(p) {}

  long value() const { return v_; }
  long modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const { return Fp(v_ + o.checked(p_), p_); }
  Fp operator-(const Fp& o) const { return Fp(v_ - o.checked(p_), p_); }
  Fp operator*(const Fp& o) const { return Fp(v_ * o.checked(p_), p_); }
  Fp operator-() const { return Fp(-v_, p_); }
  Fp inverse() const { return Fp(mod_inverse(v_, p_), p_); }
  Fp half() const { return *this * Fp(mod_inverse(2, p_), p_); }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

 private:
  long checked(long p) const {
    if (p_ != p) throw std::invalid_argument("Fp: modulus mismatch");
    return v_;
  }
  long v_;
  long p_;
};

/// The additive character x -> exp(2*pi*i*x/p), evaluated through a
/// precomputed root-of-unity table so that equal residues give bit-equal
/// complex values.
class AdditiveCharacter {
 public:
  explicit AdditiveCharacter(long p);

  long modulus() const { return p_; }
  cplx operator()(const Fp& x) const { return table_[x.value()]; }
  cplx operator()(long x) const { return table_[mod_reduce(x, p_)]; }
  // psi(x/2) with 2^{-1} the modular inverse of 2.
  cplx at_half(const Fp& x) const { return table_[(x.value() * half_) % p_]; }

 private:
  long p_;
  long half_;
  std::vector<cplx> table_;
};

// Legendre symbol; 0 at 0, +1 on nonzero squares, -1 otherwise.
int legendre(const Fp& a);
int legendre(long a, long p);

// (1/p) * sum_t psi(2^{-1} b t) legendre(t), the normalizing coefficient of
// the big-cell kernels. Rejects b = 0; |result| = 1/sqrt(p).
cplx gauss_coefficient(const Fp& b);

/// Character of a cyclic group of order m, indexed by j: g^k -> exp(2*pi*i*j*k/m).
class CyclicCharacter {
 public:
  CyclicCharacter() : m_(1), j_(0) {}
  CyclicCharacter(long order, long index)
      : m_(order), j_(mod_reduce(index, order)) {
    if (order < 1) throw std::invalid_argument("CyclicCharacter: order < 1");
  }

  long order() const { return m_; }
  long index() const { return j_; }
  bool is_trivial() const { return j_ == 0; }
  // Order-2 character, present exactly when m is even.
  bool is_quadratic() const { return m_ % 2 == 0 && j_ == m_ / 2; }

  cplx at_power(long k) const {
    long e = mod_reduce(j_ * mod_reduce(k, m_), m_);
    return std::polar(1.0, 2.0 * kPi * double(e) / double(m_));
  }

  CyclicCharacter conj() const { return CyclicCharacter(m_, m_ - j_); }
  CyclicCharacter operator*(const CyclicCharacter& o) const {
    if (m_ != o.m_) throw std::invalid_argument("CyclicCharacter: order mismatch");
    return CyclicCharacter(m_, j_ + o.j_);
  }

 private:
  long m_;
  long j_;
};

// All m characters of the cyclic group of order m.
std::vector<CyclicCharacter> cyclic_characters(long m);

// Primes in [lo, hi].
std::vector<long> primes_in_range(long lo, long hi);

}  // namespace torusweil
