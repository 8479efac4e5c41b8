#include "hopper/spectral.hpp"

#include "hopper/errors.hpp"

namespace hopper {

CycMatrix::CycMatrix(int size, int order, int sqrt_n_exp)
    : size_(size),
      order_(order),
      sqrt_n_exp_(sqrt_n_exp),
      entries_(static_cast<std::size_t>(size * size), CycNum(order, sqrt_n_exp)) {}

CycMatrix CycMatrix::identity(int size, int order) {
  CycMatrix out(size, order, 0);
  for (int k = 0; k < size; ++k) {
    out(k, k) = CycNum::integer(order, 1);
  }
  return out;
}

CycMatrix CycMatrix::adjoint() const {
  CycMatrix out(size_, order_, sqrt_n_exp_);
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) {
      out(c, r) = conj((*this)(r, c));
    }
  }
  return out;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.size() != b.size() || a.order() != b.order()) {
    throw PreconditionError("cyclotomic matrix shapes differ");
  }
  const int n = a.size();
  CycMatrix out(n, a.order(), a.sqrt_n_exp() + b.sqrt_n_exp());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      CycNum sum(a.order(), out.sqrt_n_exp());
      for (int k = 0; k < n; ++k) {
        sum += a(r, k) * b(k, c);
      }
      out(r, c) = std::move(sum);
    }
  }
  return out;
}

bool is_scalar_matrix(const CycMatrix& a, const CycNum& s) {
  for (int r = 0; r < a.size(); ++r) {
    for (int c = 0; c < a.size(); ++c) {
      if (r == c ? !(a(r, c) == s) : !is_zero(a(r, c))) {
        return false;
      }
    }
  }
  return true;
}

UnitaryPower matrix_power_exact(const Model& model, int t) {
  if (t < 0) {
    throw PreconditionError("matrix power exponent must be non-negative");
  }
  const int n = model.n();
  CycMatrix base(n, model.order(), 1);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      base(j, k) = CycNum(model.order(), 1);
      base(j, k).add_term(transfer_phase(model, j, k), BigInt(1));
    }
  }
  CycMatrix result = CycMatrix::identity(n, model.order());
  for (int e = t; e > 0; e >>= 1) {
    if (e & 1) {
      result = result * base;
    }
    if (e > 1) {
      base = base * base;
    }
  }
  return {model, t, std::move(result)};
}

bool is_unitary_exact(const UnitaryPower& power) {
  const CycMatrix gram = power.entries * power.entries.adjoint();
  return is_scalar_matrix(gram, CycNum::integer(power.model.order(), 1));
}

CycNum quadratic_gauss_element(const Model& model) {
  CycNum g(model.order());
  for (long long k = 0; k < model.n(); ++k) {
    g.add_term(k * k, BigInt(1));
  }
  return g;
}

CycNum periodicity_scalar(const Model& model) {
  const int n = model.n();
  const int order = model.order();
  switch (model.mod4()) {
    case 0:
      return CycNum::integer(order, 1);
    case 2:
      return CycNum::integer(order, -1);
    default: {
      // U^n = 1 (n = 1 mod 4) or -i (n = 3 mod 4); with scale n^(-n/2) the
      // coefficient vector is sqrt(n) n^((n-1)/2) or -i sqrt(n) n^((n-1)/2).
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>((n - 1) / 2));
      CycNum g = quadratic_gauss_element(model);
      g *= CycNum::integer(order, model.mod4() == 1 ? power : BigInt(-power));
      return CycNum(order, g.coeffs(), n);
    }
  }
}

PeriodicityFacts periodicity_class(const Model& model) {
  const int n = model.n();
  PeriodicityFacts facts;
  facts.mod4 = model.mod4();
  facts.short_period = model.is_even() ? 2 * n : n;
  switch (facts.mod4) {
    case 0:
    case 1:
      facts.short_value = "1";
      break;
    case 2:
      facts.short_value = "-1";
      break;
    default:
      facts.short_value = "-i";
  }
  const UnitaryPower shorter = matrix_power_exact(model, facts.short_period);
  facts.short_verified = is_scalar_matrix(shorter.entries, periodicity_scalar(model));
  const int repeats = 4 * n / facts.short_period;
  CycMatrix full = shorter.entries;
  for (int r = 1; r < repeats; ++r) {
    full = full * shorter.entries;
  }
  facts.full_verified = is_scalar_matrix(full, CycNum::integer(model.order(), 1));
  return facts;
}

std::complex<double> eigenvalue_formula(const Model& model, int j) {
  const double n = model.n();
  const double jj = static_cast<double>(j) * j;
  if (model.is_even()) {
    return unit_phase(0.125) * unit_phase(-jj / (2.0 * n));
  }
  const std::complex<double> base = unit_phase(-jj / (4.0 * n));
  const bool even_j = j % 2 == 0;
  const bool times_i = model.mod4() == 1 ? !even_j : even_j;
  return times_i ? std::complex<double>(0.0, 1.0) * base : base;
}

std::vector<EigenPair> eigensystem(const Model& model) {
  const int n = model.n();
  const Eigen::MatrixXcd u = transfer_matrix<double>(model);
  std::vector<EigenPair> out;
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXcd v(n);
    for (int k = 0; k < n; ++k) {
      v(k) = unit_phase(static_cast<double>(j) * k / n) / std::sqrt(static_cast<double>(n));
    }
    const std::complex<double> lambda = eigenvalue_formula(model, j);
    const double residual = (u * v - lambda * v).norm();
    out.push_back({j, std::move(v), lambda, residual});
  }
  return out;
}

}  // namespace hopper
