#include "torusweil/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace torusweil {

CMat CMat::identity(int n) {
  CMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMat CMat::operator*(const CMat& o) const {
  if (n_ != o.n_) throw std::invalid_argument("CMat: size mismatch");
  CMat r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      cplx aik = at(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      const cplx* row = &o.a_[size_t(k) * n_];
      cplx* out = &r.a_[size_t(i) * n_];
      for (int j = 0; j < n_; ++j) out[j] += aik * row[j];
    }
  }
  return r;
}

CMat CMat::operator+(const CMat& o) const {
  if (n_ != o.n_) throw std::invalid_argument("CMat: size mismatch");
  CMat r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

CMat CMat::operator-(const CMat& o) const {
  if (n_ != o.n_) throw std::invalid_argument("CMat: size mismatch");
  CMat r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

CMat CMat::operator*(cplx s) const {
  CMat r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

CVec CMat::operator*(const CVec& v) const {
  if (int(v.size()) != n_) throw std::invalid_argument("CMat: vector size mismatch");
  CVec r(n_, cplx(0.0, 0.0));
  for (int i = 0; i < n_; ++i) {
    cplx s = 0.0;
    const cplx* row = &a_[size_t(i) * n_];
    for (int j = 0; j < n_; ++j) s += row[j] * v[j];
    r[i] = s;
  }
  return r;
}

CMat CMat::dagger() const {
  CMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

cplx CMat::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

double max_abs(const CMat& m) {
  double mx = 0.0;
  for (const cplx& z : m.data()) mx = std::max(mx, std::abs(z));
  return mx;
}

double max_abs_diff(const CMat& a, const CMat& b) { return max_abs(a - b); }

double unitarity_defect(const CMat& m) {
  return max_abs_diff(m.dagger() * m, CMat::identity(m.n()));
}

double norm(const CVec& v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

cplx dot(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  cplx s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

void normalize(CVec& v) {
  double n = norm(v);
  if (n == 0.0) throw std::domain_error("normalize: zero vector");
  for (cplx& z : v) z /= n;
}

double operator_norm(const CMat& m, int iterations) {
  int n = m.n();
  if (n == 0) return 0.0;
  CMat g = m.dagger() * m;
  CVec v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx(1.0 + 0.1 * i, 0.3 * ((i * 7) % 5));
  normalize(v);
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    CVec w = g * v;
    double nw = norm(w);
    if (nw < 1e-300) return 0.0;
    lambda = nw;
    for (int i = 0; i < n; ++i) v[i] = w[i] / nw;
  }
  return std::sqrt(lambda);
}

int rank_of_rows(std::vector<CVec> rows, double tol) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    size_t piv = r;
    double best = std::abs(rows[r][col]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      double v = std::abs(rows[i][col]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= tol) continue;
    std::swap(rows[r], rows[piv]);
    cplx inv = cplx(1.0, 0.0) / rows[r][col];
    for (size_t j = col; j < ncols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      cplx f = rows[i][col];
      if (std::abs(f) <= tol * 1e-6) continue;
      for (size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return int(r);
}

int commutant_dimension(const std::vector<CMat>& ops, double tol) {
  if (ops.empty()) throw std::invalid_argument("commutant_dimension: empty list");
  int n = ops[0].n();
  for (const CMat& m : ops) {
    if (m.n() != n) throw std::invalid_argument("commutant_dimension: size mismatch");
  }
  // Unknowns X(r,s), r*n+s. Equation block per op: (X M - M X)(i,j) = 0.
  std::vector<CVec> rows;
  rows.reserve(size_t(ops.size()) * n * n);
  for (const CMat& m : ops) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CVec row(size_t(n) * n, cplx(0.0, 0.0));
        for (int s = 0; s < n; ++s) row[size_t(i) * n + s] += m.at(s, j);
        for (int r = 0; r < n; ++r) row[size_t(r) * n + j] -= m.at(i, r);
        rows.push_back(std::move(row));
      }
    }
  }
  int rank = rank_of_rows(std::move(rows), tol);
  return n * n - rank;
}

}  // namespace torusweil
