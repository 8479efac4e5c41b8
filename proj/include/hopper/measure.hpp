#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopper/cyclotomic.hpp"
#include "hopper/events.hpp"
#include "hopper/model.hpp"

namespace hopper {

/// counts(i, f, p): number of t-paths of an event that start at i, end at f
/// and have phase w^p.
class PhaseCountTable {
 public:
  PhaseCountTable(Model model, int time);

  const Model& model() const { return model_; }
  int time() const { return time_; }

  const BigInt& operator()(Site i, Site f, int p) const { return counts_[index(i, f, p)]; }
  BigInt& operator()(Site i, Site f, int p) { return counts_[index(i, f, p)]; }

  BigInt total() const;

  /// Entry-wise sum; both tables must share model and time.
  PhaseCountTable& operator+=(const PhaseCountTable& rhs);

  friend bool operator==(const PhaseCountTable&, const PhaseCountTable&) = default;

 private:
  std::size_t index(Site i, Site f, int p) const {
    const auto n = static_cast<std::size_t>(model_.n());
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(f)) *
               static_cast<std::size_t>(model_.order()) +
           static_cast<std::size_t>(p);
  }

  Model model_;
  int time_;
  std::vector<BigInt> counts_;
};

/// Tally of an explicit path set (all of the same length).
PhaseCountTable tally_paths(const Model& model, int time, const std::vector<TPath>& paths);

/// Extends every counted path by `steps` unconstrained steps.
PhaseCountTable advance(const PhaseCountTable& table, int steps);

/// Phase counts at time t >= t_E, via the canonical form and `t - t_E` DP steps.
PhaseCountTable phase_counts(const Event& e, int t);
PhaseCountTable phase_counts(const Event& e);

/// X(i, f) = sum_p counts(i, f, p) w^p with sqrt_n_exp = t. The event is null
/// for every initial state iff all of these vanish.
std::vector<CycNum> cell_sums(const PhaseCountTable& table);

/// Per final site, the amplitude sum over paths ending there (up to c in exact mode).
std::vector<CycNum> amplitude_sums(const PhaseCountTable& table, const ExactState& psi);
std::vector<std::complex<double>> amplitude_sums(const PhaseCountTable& table,
                                                 const FloatState& psi);

using Amplitude = std::variant<CycNum, std::complex<double>>;

/// D(E, F) evaluated at `t` (default max of the defining times). Exact mode
/// carries sqrt_n_exp = 2t and omits |c|^2.
Amplitude decoherence(const Event& e, const Event& f, const InitialState& psi,
                      std::optional<int> t = std::nullopt);

struct MeasureOptions {
  /// Float-mode nullity threshold.
  double eps_null = 1e-18;
  /// |c|^2 used to report exact-mode measures numerically. Defaults to
  /// 1 / sum z_i^2, the value that normalizes the state.
  std::optional<double> c_abs_sq;
};

struct MeasureResult {
  std::optional<CycNum> exact;
  double numeric = 0.0;
  bool is_zero = false;
  /// Set when is_zero came from the float threshold rather than an exact decision.
  bool thresholded = false;
  std::vector<double> per_final_site;
  std::string mode() const { return exact ? "exact" : "float"; }
};

MeasureResult measure(const Event& e, const InitialState& psi, const MeasureOptions& options = {});

/// Sufficient condition for nullity under every initial state: per (i, f),
/// equal counts over p (odd n) or counts(p) == counts(p + n) (even n).
bool is_null_universal(const Event& e);

bool is_null(const Event& e, const InitialState& psi, const MeasureOptions& options = {});

}  // namespace hopper
