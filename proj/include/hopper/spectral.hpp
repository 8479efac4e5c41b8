#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hopper/cyclotomic.hpp"
#include "hopper/model.hpp"

namespace hopper {

/// Dense square matrix of cyclotomic numbers sharing one sqrt(n) exponent.
class CycMatrix {
 public:
  CycMatrix(int size, int order, int sqrt_n_exp);

  static CycMatrix identity(int size, int order);

  int size() const { return size_; }
  int order() const { return order_; }
  int sqrt_n_exp() const { return sqrt_n_exp_; }

  const CycNum& operator()(int r, int c) const { return entries_[index(r, c)]; }
  CycNum& operator()(int r, int c) { return entries_[index(r, c)]; }

  /// Conjugate transpose.
  CycMatrix adjoint() const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(c);
  }

  int size_;
  int order_;
  int sqrt_n_exp_;
  std::vector<CycNum> entries_;
};

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);

/// True when a equals the scalar matrix s * 1 (value equality entry by entry).
bool is_scalar_matrix(const CycMatrix& a, const CycNum& s);

/// U(n)^t with every entry stored exactly as (integer combination of w^p) * n^(-t/2).
struct UnitaryPower {
  Model model;
  int t;
  CycMatrix entries;
};

UnitaryPower matrix_power_exact(const Model& model, int t);

/// (n^(t/2) U^t)(n^(t/2) U^t)^dagger == n^t 1, decided exactly.
bool is_unitary_exact(const UnitaryPower& power);

/// Sum_k w^(k^2) over k in Z_n; for odd n this is sqrt(n) (n = 1 mod 4) or
/// i sqrt(n) (n = 3 mod 4) expressed inside Z[w].
CycNum quadratic_gauss_element(const Model& model);

/// The mod-4 periodicity facts of U(n), each checked exactly.
struct PeriodicityFacts {
  int mod4;
  /// 2n for even n, n for odd n.
  int short_period;
  /// Claimed U^short_period: "1", "-1" or "-i".
  std::string short_value;
  bool short_verified;
  /// U^(4n) == 1.
  bool full_verified;
};

PeriodicityFacts periodicity_class(const Model& model);

/// Exact scalar U^short_period claims, as a CycNum with sqrt_n_exp == short_period.
CycNum periodicity_scalar(const Model& model);

/// e(x) = exp(2 pi i x).
template <class Real = double>
std::complex<Real> unit_phase(Real x) {
  return std::polar(Real(1), Real(2) * std::numbers::pi_v<Real> * x);
}

template <class Real = double>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> transfer_matrix(const Model& model) {
  const int n = model.n();
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> u(n, n);
  const Real scale = Real(1) / std::sqrt(static_cast<Real>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      u(j, k) = scale * unit_phase<Real>(static_cast<Real>(transfer_phase(model, j, k)) /
                                         static_cast<Real>(model.order()));
    }
  }
  return u;
}

/// Closed-form eigenvalue of the Fourier mode j.
std::complex<double> eigenvalue_formula(const Model& model, int j);

struct EigenPair {
  int j;
  Eigen::VectorXcd vector;
  std::complex<double> value;
  /// ||U v - lambda v||_2 against the numeric transfer matrix.
  double residual;
};

/// Fourier-basis eigenvectors e(jk/n)/sqrt(n) with closed-form eigenvalues.
std::vector<EigenPair> eigensystem(const Model& model);

struct Rational {
  long long num;
  long long den = 1;
};

/// G(a, b, m) = sum_{k<m} e((a k^2 + b k) / m) by direct summation. The phase
/// is reduced mod 1 in exact integer arithmetic before evaluation.
template <class Real = double>
std::complex<Real> gauss_sum(Rational a, Rational b, long long m) {
  // (a k^2 + b k) / m = (a.num b.den k^2 + b.num a.den k) / (a.den b.den m)
  const __int128 den = static_cast<__int128>(a.den) * b.den * m;
  std::complex<Real> sum = 0;
  for (long long k = 0; k < m; ++k) {
    __int128 num = static_cast<__int128>(a.num) * b.den % den * k % den * k % den +
                   static_cast<__int128>(b.num) * a.den % den * k % den;
    num %= den;
    if (num < 0) {
      num += den;
    }
    sum += unit_phase<Real>(static_cast<Real>(static_cast<long double>(num) /
                                              static_cast<long double>(den)));
  }
  return sum;
}

}  // namespace hopper
