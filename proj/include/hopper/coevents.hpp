#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hopper/events.hpp"
#include "hopper/measure.hpp"
#include "hopper/model.hpp"

namespace hopper {

/// Subset of the truncated history space, bit k standing for history k.
using HistorySet = std::uint64_t;

/// The finite history space of all t_max-paths together with a measure on
/// its subsets: either the quantum measure of an initial state or a classical
/// probability vector.
class TruncatedSystem {
 public:
  static TruncatedSystem quantum(const Model& model, int t_max, const InitialState& psi,
                                 const MeasureOptions& options = {});
  /// `probs[k]` is the probability of history k (see history()).
  static TruncatedSystem classical(const Model& model, int t_max, std::vector<double> probs);

  const Model& model() const { return model_; }
  int t_max() const { return t_max_; }
  std::size_t size() const { return histories_.size(); }
  HistorySet full() const;
  bool is_classical() const { return classical_.has_value(); }

  /// Histories are indexed in lexicographic order of their sites.
  const TPath& history(std::size_t k) const { return histories_[k]; }
  std::size_t index_of(const TPath& path) const;

  HistorySet from_event(const Event& e) const;
  Event to_event(HistorySet a) const;

  bool is_null(HistorySet a) const;
  double measure(HistorySet a) const;
  std::complex<double> decoherence(HistorySet a, HistorySet b) const;

  /// The null sets not strictly contained in another null set. Computed on
  /// first use by a scan of all subsets; requires size() <= cap.
  const std::vector<HistorySet>& maximal_null_events(std::size_t cap = 16) const;

 private:
  TruncatedSystem(Model model, int t_max);

  struct Record {
    Site i;
    Site f;
    int p;
  };

  Model model_;
  int t_max_;
  std::vector<TPath> histories_;
  std::vector<Record> records_;
  std::optional<ExactState> exact_;
  std::optional<FloatState> floating_;
  std::optional<std::vector<double>> classical_;
  MeasureOptions options_;
  mutable std::optional<std::vector<HistorySet>> maximal_null_;
};

/// Multiplicative co-event, phi(A) = 1 iff support is contained in A.
struct Coevent {
  HistorySet support = 0;
  friend bool operator==(const Coevent&, const Coevent&) = default;
};

int evaluate(const Coevent& phi, HistorySet a);

/// phi denies every null event.
bool is_preclusive(const Coevent& phi, const TruncatedSystem& sys, std::size_t cap = 16);

/// Inclusion-minimal preclusive supports, by increasing cardinality and then
/// by mask value. Throws LimitError when the history space exceeds `cap`.
std::vector<Coevent> minimal_preclusive_supports(const TruncatedSystem& sys, std::size_t cap = 16);

struct StymiedResult {
  bool stymied = false;
  /// E itself is null.
  bool self_null = false;
  /// A null superset of least cardinality when stymied.
  std::optional<HistorySet> witness;
};

/// Searches for a null F containing E. Works class by class on (i, f, p) so
/// it does not need to enumerate subsets of the history space.
StymiedResult is_stymied(HistorySet e, const TruncatedSystem& sys);

/// Number of worker threads, from QMT_THREADS (default 1).
unsigned worker_threads();

}  // namespace hopper
