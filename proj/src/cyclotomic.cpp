#include "hopper/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "hopper/errors.hpp"

namespace hopper {
namespace {

using Poly = std::vector<BigInt>;

void require_order(int order) {
  if (order < 2) {
    throw PreconditionError("cyclotomic order must be >= 2, got " + std::to_string(order));
  }
}

void require_same_order(const CycNum& a, const CycNum& b) {
  if (a.order() != b.order()) {
    throw PreconditionError("cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
  }
}

long long wrap(long long p, int order) {
  long long r = p % order;
  return r < 0 ? r + order : r;
}

// Quotient of an exact division by a monic polynomial.
Poly exact_divide(const Poly& num, const Poly& den) {
  Poly rem = num;
  const std::size_t dn = den.size() - 1;
  Poly quot(rem.size() - dn);
  for (std::size_t k = rem.size(); k-- > dn;) {
    const BigInt c = rem[k];
    if (c == 0) {
      continue;
    }
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) {
      rem[k - dn + j] -= c * den[j];
    }
  }
  return quot;
}

// In-place remainder modulo a monic polynomial; entries at or above its degree become 0.
void reduce_mod(Poly& a, const Poly& modulus) {
  const std::size_t d = modulus.size() - 1;
  for (std::size_t k = a.size(); k-- > d;) {
    if (a[k] == 0) {
      continue;
    }
    const BigInt c = a[k];
    for (std::size_t j = 0; j <= d; ++j) {
      a[k - d + j] -= c * modulus[j];
    }
  }
}

}  // namespace

CycNum::CycNum(int order, int sqrt_n_exp) : sqrt_n_exp_(sqrt_n_exp) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order), BigInt(0));
}

CycNum::CycNum(int order, std::vector<BigInt> coeffs, int sqrt_n_exp)
    : coeffs_(std::move(coeffs)), sqrt_n_exp_(sqrt_n_exp) {
  require_order(order);
  if (static_cast<int>(coeffs_.size()) != order) {
    throw PreconditionError("coefficient vector must have exactly `order` entries");
  }
}

CycNum CycNum::integer(int order, const BigInt& value, int sqrt_n_exp) {
  CycNum out(order, sqrt_n_exp);
  out.coeffs_[0] = value;
  return out;
}

void CycNum::add_term(long long p, const BigInt& count) {
  coeffs_[static_cast<std::size_t>(wrap(p, order()))] += count;
}

int CycNum::model_n() const {
  const int m = order();
  if (m % 2 == 1 && m >= 3) {
    return m;
  }
  if (m % 4 == 0) {
    return m / 2;
  }
  throw PreconditionError("order " + std::to_string(m) + " is not n'(n) for any hopper size n");
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  require_same_order(*this, rhs);
  if (sqrt_n_exp_ != rhs.sqrt_n_exp_) {
    throw PreconditionError("sqrt(n) exponent mismatch in addition: " + std::to_string(sqrt_n_exp_) +
                            " vs " + std::to_string(rhs.sqrt_n_exp_));
  }
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    coeffs_[p] += rhs.coeffs_[p];
  }
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum& CycNum::operator*=(const CycNum& rhs) {
  require_same_order(*this, rhs);
  const std::size_t m = coeffs_.size();
  std::vector<BigInt> out(m, BigInt(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (rhs.coeffs_[j] == 0) {
        continue;
      }
      out[(i + j) % m] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  sqrt_n_exp_ += rhs.sqrt_n_exp_;
  return *this;
}

CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
CycNum operator*(const CycNum& a, const CycNum& b) {
  CycNum out = a;
  out *= b;
  return out;
}

CycNum operator-(CycNum a) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& x : c) {
    x = -x;
  }
  return CycNum(a.order(), std::move(c), a.sqrt_n_exp());
}

bool operator==(const CycNum& a, const CycNum& b) {
  require_same_order(a, b);
  const int k = std::max(a.sqrt_n_exp(), b.sqrt_n_exp());
  if ((a.sqrt_n_exp() - b.sqrt_n_exp()) % 2 != 0) {
    throw PreconditionError("cannot compare values whose sqrt(n) exponents differ by an odd amount");
  }
  return is_zero(rescaled(a, k) - rescaled(b, k));
}

CycNum root_power(int order, long long p) {
  CycNum out(order);
  out.add_term(p, BigInt(1));
  return out;
}

CycNum conj(const CycNum& a) {
  const int m = a.order();
  std::vector<BigInt> c(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    c[static_cast<std::size_t>((m - p) % m)] = a[p];
  }
  return CycNum(m, std::move(c), a.sqrt_n_exp());
}

CycNum abs_sq(const CycNum& a) { return a * conj(a); }

const std::vector<BigInt>& cyclotomic_polynomial(int m) {
  static std::recursive_mutex mutex;
  static std::map<int, Poly> cache;
  if (m < 1) {
    throw PreconditionError("cyclotomic polynomial index must be >= 1");
  }
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) {
    return it->second;
  }
  Poly poly(static_cast<std::size_t>(m) + 1, BigInt(0));
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) {
      poly = exact_divide(poly, cyclotomic_polynomial(d));
    }
  }
  return cache.emplace(m, std::move(poly)).first->second;
}

CycNum reduced(const CycNum& a) {
  std::vector<BigInt> c = a.coeffs();
  reduce_mod(c, cyclotomic_polynomial(a.order()));
  return CycNum(a.order(), std::move(c), a.sqrt_n_exp());
}

bool is_zero(const CycNum& a) {
  const CycNum r = reduced(a);
  for (const auto& c : r.coeffs()) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

CycNum rescaled(const CycNum& a, int sqrt_n_exp) {
  const int diff = sqrt_n_exp - a.sqrt_n_exp();
  if (diff == 0) {
    return a;
  }
  if (diff < 0 || diff % 2 != 0) {
    throw PreconditionError("rescale needs a non-negative even exponent increase, got " +
                            std::to_string(diff));
  }
  BigInt factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(a.model_n()),
                static_cast<unsigned long>(diff / 2));
  std::vector<BigInt> c = a.coeffs();
  for (auto& x : c) {
    x *= factor;
  }
  return CycNum(a.order(), std::move(c), sqrt_n_exp);
}

std::complex<double> to_complex(const CycNum& a, int n) {
  const int m = a.order();
  std::complex<double> sum = 0.0;
  for (int p = 0; p < m; ++p) {
    if (a[p] == 0) {
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(m);
    sum += a[p].get_d() * std::polar(1.0, angle);
  }
  return sum * std::pow(static_cast<double>(n), -0.5 * a.sqrt_n_exp());
}

std::complex<double> to_complex(const CycNum& a) { return to_complex(a, a.model_n()); }

}  // namespace hopper
