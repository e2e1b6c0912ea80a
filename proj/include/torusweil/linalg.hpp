#pragma once

#include <complex>
#include <vector>

namespace torusweil {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Dense complex square matrix, row-major. Operators on the quantum space
/// act on column vectors: (M f)(x) = sum_y M(x,y) f(y).
class CMat {
 public:
  CMat() : n_(0) {}
  explicit CMat(int n) : n_(n), a_(size_t(n) * n, cplx(0.0, 0.0)) {}

  static CMat identity(int n);

  int n() const { return n_; }
  cplx& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
  const cplx& at(int i, int j) const { return a_[size_t(i) * n_ + j]; }
  const std::vector<cplx>& data() const { return a_; }

  CMat operator*(const CMat& o) const;
  CMat operator+(const CMat& o) const;
  CMat operator-(const CMat& o) const;
  CMat operator*(cplx s) const;
  CVec operator*(const CVec& v) const;

  CMat dagger() const;
  cplx trace() const;

 private:
  int n_;
  std::vector<cplx> a_;
};

double max_abs(const CMat& m);
// max_{i,j} |a(i,j) - b(i,j)|
double max_abs_diff(const CMat& a, const CMat& b);
// max |M^dag M - I|
double unitarity_defect(const CMat& m);

double norm(const CVec& v);
cplx dot(const CVec& a, const CVec& b);  // conj(a) . b
void normalize(CVec& v);

// Operator 2-norm by power iteration on M^dag M (deterministic start).
double operator_norm(const CMat& m, int iterations = 300);

// Rank of a dense complex matrix given as a list of rows, by Gaussian
// elimination with partial pivoting. Entries below tol are treated as zero.
int rank_of_rows(std::vector<CVec> rows, double tol = 1e-8);

// Dimension of the joint commutant {X : X M_k = M_k X for all k}.
int commutant_dimension(const std::vector<CMat>& ops, double tol = 1e-8);

}  // namespace torusweil
