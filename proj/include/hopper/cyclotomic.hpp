#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace hopper {

using BigInt = mpz_class;

/// Exact element of Z[w] (w a primitive `order`-th root of unity) carrying an
/// overall scale n^(-k/2), where n is the hopper size belonging to `order`.
///
/// Coefficients live in Z[x]/(x^order - 1), so the vector is not a unique
/// representative of the complex value. Equality and the zero test reduce
/// modulo the cyclotomic polynomial of `order`.
class CycNum {
 public:
  /// Zero of the given order.
  explicit CycNum(int order, int sqrt_n_exp = 0);
  CycNum(int order, std::vector<BigInt> coeffs, int sqrt_n_exp = 0);

  static CycNum integer(int order, const BigInt& value, int sqrt_n_exp = 0);

  int order() const { return static_cast<int>(coeffs_.size()); }
  int sqrt_n_exp() const { return sqrt_n_exp_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](int p) const { return coeffs_[static_cast<std::size_t>(p)]; }

  /// Adds `count` * w^p in place; p is taken mod order.
  void add_term(long long p, const BigInt& count);

  /// Hopper size n with n'(n) == order. Throws for orders that are not of
  /// that form (2 mod 4, or < 3).
  int model_n() const;

  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);

 private:
  std::vector<BigInt> coeffs_;
  int sqrt_n_exp_ = 0;
};

CycNum operator+(CycNum a, const CycNum& b);
CycNum operator-(CycNum a, const CycNum& b);
CycNum operator*(const CycNum& a, const CycNum& b);
CycNum operator-(CycNum a);

/// Value equality. Operands with different scales are rescaled when the
/// difference of exponents is even; an odd difference throws.
bool operator==(const CycNum& a, const CycNum& b);

/// w^(p mod order), unscaled.
CycNum root_power(int order, long long p);

/// Complex conjugate: coefficient of w^p moves to w^(-p).
CycNum conj(const CycNum& a);

/// a * conj(a).
CycNum abs_sq(const CycNum& a);

/// Exact decision of a == 0 in C.
bool is_zero(const CycNum& a);

/// Same value with a larger scale exponent: coeffs multiplied by n^((k-k0)/2).
CycNum rescaled(const CycNum& a, int sqrt_n_exp);

/// Remainder modulo the cyclotomic polynomial, padded to `order` entries.
CycNum reduced(const CycNum& a);

std::complex<double> to_complex(const CycNum& a, int n);
std::complex<double> to_complex(const CycNum& a);

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
/// Computed by exact division of x^m - 1 and memoized.
const std::vector<BigInt>& cyclotomic_polynomial(int m);

/// n'(n): 2n for even n, n for odd n.
constexpr int phase_order(int n) { return n % 2 == 0 ? 2 * n : n; }

}  // namespace hopper
