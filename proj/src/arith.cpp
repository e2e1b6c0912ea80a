#include "torusweil/arith.hpp"

#include <cmath>
#include <numeric>

namespace torusweil {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(long p) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("modulus must be an odd prime >= 5, got " +
                                std::to_string(p));
  }
}

long mod_reduce(long a, long m) {
  if (m <= 0) throw std::invalid_argument("mod_reduce: nonpositive modulus");
  long r = a % m;
  return r < 0 ? r + m : r;
}

long mod_pow(long base, long exp, long m) {
  long b = mod_reduce(base, m);
  long r = 1 % m;
  while (exp > 0) {
    if (exp & 1) r = (r * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return r;
}

long mod_inverse(long a, long m) {
  long r = mod_reduce(a, m);
  if (r == 0) throw std::domain_error("mod_inverse: zero is not invertible");
  // Extended Euclid.
  long t = 0, new_t = 1;
  long rr = m, new_r = r;
  while (new_r != 0) {
    long q = rr / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = rr - q * new_r;
    rr = new_r;
    new_r = tmp;
  }
  if (rr != 1) throw std::domain_error("mod_inverse: not coprime to modulus");
  return mod_reduce(t, m);
}

AdditiveCharacter::AdditiveCharacter(long p) : p_(p) {
  require_odd_prime(p);
  half_ = mod_inverse(2, p);
  table_.resize(p);
  for (long k = 0; k < p; ++k) {
    table_[k] = std::polar(1.0, 2.0 * kPi * double(k) / double(p));
  }
}

int legendre(long a, long p) {
  long r = mod_reduce(a, p);
  if (r == 0) return 0;
  long e = mod_pow(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int legendre(const Fp& a) { return legendre(a.value(), a.modulus()); }

cplx gauss_coefficient(const Fp& b) {
  if (b.is_zero()) throw std::domain_error("gauss_coefficient: b must be nonzero");
  long p = b.modulus();
  AdditiveCharacter psi(p);
  cplx sum = 0.0;
  for (long t = 1; t < p; ++t) {
    sum += psi.at_half(b * Fp(t, p)) * double(legendre(t, p));
  }
  return sum / double(p);
}

std::vector<CyclicCharacter> cyclic_characters(long m) {
  if (m < 1) throw std::invalid_argument("cyclic_characters: m < 1");
  std::vector<CyclicCharacter> out;
  out.reserve(m);
  for (long j = 0; j < m; ++j) out.emplace_back(m, j);
  return out;
}

std::vector<long> primes_in_range(long lo, long hi) {
  std::vector<long> out;
  for (long n = std::max(lo, 2L); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

}  // namespace torusweil
