#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopper/cyclotomic.hpp"
#include "hopper/events.hpp"
#include "hopper/measure.hpp"
#include "hopper/model.hpp"

namespace hopper {

/// Segment f -> f+1 -> f repeated k times, then constant f; 2(n-1) steps in
/// total with phase 2k mod n'.
TPath zigzag_tail(const Model& model, Site f, int k);

/// c_i(E) n^(t - t_E - 2n + 1) on admissible (i, f, p), zero elsewhere.
/// Requires t >= t_E + 2n - 1.
PhaseCountTable count_lower_bound(const Event& e, int t);

/// A block of paths of G: `prefix` (a path of the complement at the base
/// time) followed by the segments of rank [lo, hi) in lexicographic order.
///
/// With a zig-zag count the segment runs from the end of the prefix to f in
/// `horizon - base_time - 2(n-1)` steps and is followed by zigzag_tail(f, k);
/// its phase is whatever makes the whole path carry phase p. Without one the
/// segment is the whole remainder of the path, ranked among those with the
/// required phase.
struct Generator {
  Site i;
  Site f;
  int p;
  TPath prefix;
  std::optional<int> zigzag;
  BigInt lo;
  BigInt hi;
};

enum class StymieKind { Universal, Initial };

/// Record of a null superset F = E u G of a time-finite event E.
struct StymieCertificate {
  StymieKind kind;
  /// E in canonical form.
  Event base;
  int base_time;
  int m;
  /// Time at which the paths of G live: t_E + 4nm (universal) or T = 4nM (initial).
  int horizon;
  /// Initial variant only: M, the inner time t = 4nm, the state and the site i_check.
  int big_m = 0;
  int inner_time = 0;
  std::optional<ExactState> state;
  Site i_check = -1;
  /// Target phase counts of G at the horizon.
  PhaseCountTable required;
  std::vector<Generator> generators;
  BigInt g_size;
  /// Universal: sum over (i, f) of |X(i, f)|^2, zero iff F is null for every
  /// initial state. Initial: mu(F) up to |c|^2 under `state`.
  CycNum mu_exact;
  bool mu_is_zero;
  /// Phase counts of F at the horizon.
  PhaseCountTable f_counts;

  const Model& model() const { return base.model(); }
};

struct StymieOptions {
  int m_max = 4;
  int big_m_max = 8;
  /// Above this |G| verification works from counts instead of explicit paths.
  std::size_t materialize_cap = 1'000'000;
};

/// Null superset for an event with no Cyl(i) inside it, valid for every
/// initial state. m is the least value whose horizon offers enough paths of
/// the complement in every (i, f, p) class.
StymieCertificate build_null_superset(const Event& e, const StymieOptions& options = {});

/// Null superset of an event containing every Cyl(i) except Cyl(i_check), for
/// odd n and psi_i = c z_i w^(q_i).
StymieCertificate build_null_superset_initial(const Event& e, const ExactState& psi, Site i_check,
                                              const StymieOptions& options = {});

struct VerifyReport {
  bool ok = false;
  bool materialized = false;
  std::string reason;
};

VerifyReport verify_report(const StymieCertificate& cert, const StymieOptions& options = {});
bool verify_certificate(const StymieCertificate& cert, const StymieOptions& options = {});

/// Calls `visit` for every path of G, generator by generator.
void for_each_g_path(const StymieCertificate& cert,
                     const std::function<void(const TPath&, const Generator&)>& visit);

/// Explicit G as an event at the horizon. Throws LimitError above `cap` paths.
Event materialize_g(const StymieCertificate& cert, std::size_t cap = 1'000'000);

}  // namespace hopper
