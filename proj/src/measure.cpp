#include "hopper/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hopper/errors.hpp"

namespace hopper {
namespace {

double exact_c_abs_sq(const ExactState& psi, const MeasureOptions& options) {
  if (options.c_abs_sq) {
    return *options.c_abs_sq;
  }
  double norm = 0.0;
  for (long z : psi.z) {
    norm += static_cast<double>(z) * static_cast<double>(z);
  }
  return 1.0 / norm;
}

}  // namespace

PhaseCountTable::PhaseCountTable(Model model, int time)
    : model_(model),
      time_(time),
      counts_(static_cast<std::size_t>(model.n() * model.n() * model.order()), BigInt(0)) {}

BigInt PhaseCountTable::total() const {
  BigInt sum = 0;
  for (const auto& c : counts_) {
    sum += c;
  }
  return sum;
}

PhaseCountTable& PhaseCountTable::operator+=(const PhaseCountTable& rhs) {
  if (model_ != rhs.model_ || time_ != rhs.time_) {
    throw PreconditionError("phase count tables differ in model or time");
  }
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    counts_[k] += rhs.counts_[k];
  }
  return *this;
}

PhaseCountTable tally_paths(const Model& model, int time, const std::vector<TPath>& paths) {
  PhaseCountTable table(model, time);
  for (const auto& path : paths) {
    if (path.time() != time) {
      throw PreconditionError("tally needs paths of a common length");
    }
    table(path.front(), path.back(), path_phase(model, path)) += 1;
  }
  return table;
}

PhaseCountTable advance(const PhaseCountTable& table, int steps) {
  if (steps < 0) {
    throw PreconditionError("cannot advance a phase count table backwards");
  }
  const Model& model = table.model();
  const int n = model.n();
  const int order = model.order();
  PhaseCountTable current = table;
  for (int s = 0; s < steps; ++s) {
    PhaseCountTable next(model, current.time() + 1);
    for (Site i = 0; i < n; ++i) {
      for (Site f = 0; f < n; ++f) {
        for (int p = 0; p < order; ++p) {
          const BigInt& c = current(i, f, p);
          if (c == 0) {
            continue;
          }
          for (Site g = 0; g < n; ++g) {
            next(i, g, (p + transfer_phase(model, f, g)) % order) += c;
          }
        }
      }
    }
    current = std::move(next);
  }
  return current;
}

PhaseCountTable phase_counts(const Event& e, int t) {
  const DefiningTime d = defining_time(e);
  if (t < d.time) {
    throw PreconditionError("phase counts requested at t=" + std::to_string(t) +
                            " before the defining time " + std::to_string(d.time));
  }
  return advance(tally_paths(e.model(), d.time, d.canonical.paths()), t - d.time);
}

PhaseCountTable phase_counts(const Event& e) {
  const DefiningTime d = defining_time(e);
  return tally_paths(e.model(), d.time, d.canonical.paths());
}

std::vector<CycNum> cell_sums(const PhaseCountTable& table) {
  const Model& model = table.model();
  const int n = model.n();
  std::vector<CycNum> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (Site i = 0; i < n; ++i) {
    for (Site f = 0; f < n; ++f) {
      CycNum x(model.order(), table.time());
      for (int p = 0; p < model.order(); ++p) {
        x.add_term(p, table(i, f, p));
      }
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<CycNum> amplitude_sums(const PhaseCountTable& table, const ExactState& psi) {
  const Model& model = table.model();
  validate(model, psi);
  const int n = model.n();
  std::vector<CycNum> out(static_cast<std::size_t>(n), CycNum(model.order(), table.time()));
  for (Site f = 0; f < n; ++f) {
    CycNum& sum = out[static_cast<std::size_t>(f)];
    for (Site i = 0; i < n; ++i) {
      const long z = psi.z[static_cast<std::size_t>(i)];
      if (z == 0) {
        continue;
      }
      const int q = psi.q[static_cast<std::size_t>(i)];
      for (int p = 0; p < model.order(); ++p) {
        const BigInt& c = table(i, f, p);
        if (c != 0) {
          sum.add_term(p + q, c * z);
        }
      }
    }
  }
  return out;
}

std::vector<std::complex<double>> amplitude_sums(const PhaseCountTable& table,
                                                 const FloatState& psi) {
  const Model& model = table.model();
  validate(model, psi);
  const int n = model.n();
  const double scale = std::pow(static_cast<double>(n), -0.5 * table.time());
  std::vector<std::complex<double>> roots;
  for (int p = 0; p < model.order(); ++p) {
    roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * p / model.order()));
  }
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (Site f = 0; f < n; ++f) {
    std::complex<double> sum = 0.0;
    for (Site i = 0; i < n; ++i) {
      std::complex<double> inner = 0.0;
      for (int p = 0; p < model.order(); ++p) {
        const BigInt& c = table(i, f, p);
        if (c != 0) {
          inner += (c.get_d() * scale) * roots[static_cast<std::size_t>(p)];
        }
      }
      sum += psi.psi[static_cast<std::size_t>(i)] * inner;
    }
    out[static_cast<std::size_t>(f)] = sum;
  }
  return out;
}

Amplitude decoherence(const Event& e, const Event& f, const InitialState& psi,
                      std::optional<int> t) {
  if (e.model() != f.model()) {
    throw PreconditionError("decoherence functional needs events of the same model");
  }
  const int t_min = std::max(defining_time(e).time, defining_time(f).time);
  const int at = t.value_or(t_min);
  if (at < t_min) {
    throw PreconditionError("decoherence evaluated before the defining times");
  }
  const PhaseCountTable se = phase_counts(e, at);
  const PhaseCountTable sf = phase_counts(f, at);
  const int n = e.model().n();
  if (const auto* exact = std::get_if<ExactState>(&psi)) {
    const auto ae = amplitude_sums(se, *exact);
    const auto af = amplitude_sums(sf, *exact);
    CycNum sum(e.model().order(), 2 * at);
    for (int k = 0; k < n; ++k) {
      sum += ae[static_cast<std::size_t>(k)] * conj(af[static_cast<std::size_t>(k)]);
    }
    return sum;
  }
  const auto& fl = std::get<FloatState>(psi);
  const auto ae = amplitude_sums(se, fl);
  const auto af = amplitude_sums(sf, fl);
  std::complex<double> sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += ae[static_cast<std::size_t>(k)] * std::conj(af[static_cast<std::size_t>(k)]);
  }
  return sum;
}

MeasureResult measure(const Event& e, const InitialState& psi, const MeasureOptions& options) {
  const PhaseCountTable table = phase_counts(e);
  const int n = e.model().n();
  MeasureResult result;
  if (const auto* exact = std::get_if<ExactState>(&psi)) {
    const double c2 = exact_c_abs_sq(*exact, options);
    const auto sums = amplitude_sums(table, *exact);
    CycNum mu(e.model().order(), 2 * table.time());
    bool all_zero = true;
    for (const auto& a : sums) {
      const CycNum term = abs_sq(a);
      mu += term;
      all_zero = all_zero && is_zero(a);
      result.per_final_site.push_back(to_complex(reduced(term), n).real() * c2);
    }
    result.numeric = to_complex(reduced(mu), n).real() * c2;
    result.is_zero = all_zero;
    result.exact = std::move(mu);
    return result;
  }
  const auto sums = amplitude_sums(table, std::get<FloatState>(psi));
  for (const auto& a : sums) {
    result.per_final_site.push_back(std::norm(a));
    result.numeric += std::norm(a);
  }
  result.is_zero = result.numeric < options.eps_null;
  result.thresholded = true;
  return result;
}

bool is_null_universal(const Event& e) {
  const PhaseCountTable table = phase_counts(e);
  const Model& model = e.model();
  const int n = model.n();
  for (Site i = 0; i < n; ++i) {
    for (Site f = 0; f < n; ++f) {
      if (model.is_even()) {
        for (int p = 0; p < n; ++p) {
          if (table(i, f, p) != table(i, f, p + n)) {
            return false;
          }
        }
      } else {
        for (int p = 1; p < n; ++p) {
          if (table(i, f, p) != table(i, f, 0)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool is_null(const Event& e, const InitialState& psi, const MeasureOptions& options) {
  return measure(e, psi, options).is_zero;
}

}  // namespace hopper
