#pragma once

#include <complex>
#include <compare>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include "hopper/cyclotomic.hpp"

namespace hopper {

using Site = int;

/// The n-site hopper: a particle on a ring of n sites whose one-step transfer
/// amplitude from j to k is w^((j-k)^2) / sqrt(n), with w = e(1/2n) for even n
/// and e(1/n) for odd n.
class Model {
 public:
  explicit Model(int n);

  int n() const { return n_; }
  /// n'(n), the order of w.
  int order() const { return phase_order(n_); }
  int mod4() const { return n_ % 4; }
  bool is_even() const { return n_ % 2 == 0; }
  bool valid_site(Site s) const { return s >= 0 && s < n_; }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  int n_;
};

/// The first t+1 sites of a history.
class TPath {
 public:
  TPath() = default;
  explicit TPath(std::vector<Site> sites);
  TPath(std::initializer_list<Site> sites);

  int time() const { return static_cast<int>(sites_.size()) - 1; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  Site operator[](std::size_t k) const { return sites_[k]; }
  Site front() const { return sites_.front(); }
  Site back() const { return sites_.back(); }
  std::span<const Site> sites() const { return sites_; }

  void push_back(Site s) { sites_.push_back(s); }
  TPath extended(Site s) const;
  /// The first `time + 1` sites.
  TPath prefix(int time) const;
  /// This path followed by `tail` without its first site (which must equal back()).
  TPath joined(const TPath& tail) const;
  TPath reversed() const;

  friend auto operator<=>(const TPath&, const TPath&) = default;
  friend bool operator==(const TPath&, const TPath&) = default;

 private:
  std::vector<Site> sites_;
};

/// psi_i = c * z_i * w^(q_i) with the constant c left implicit.
struct ExactState {
  std::vector<long> z;
  std::vector<int> q;
};

/// Explicit complex amplitudes, normalized.
struct FloatState {
  std::vector<std::complex<double>> psi;
};

using InitialState = std::variant<ExactState, FloatState>;

void validate(const Model& model, const TPath& path);
void validate(const Model& model, const ExactState& state);
void validate(const Model& model, const FloatState& state);
void validate(const Model& model, const InitialState& state);

/// Exact state with psi_i = z_i * w^(q_i) evaluated numerically and divided by sqrt(sum z_i^2).
FloatState normalized(const Model& model, const ExactState& state);

/// Power p in [0, n') with U_jk = w^p / sqrt(n).
int transfer_phase(const Model& model, Site j, Site k);

/// Sum of squared steps mod n'; excludes the initial amplitude.
int path_phase(const Model& model, const TPath& path);

/// z_{g(0)} w^(q_{g(0)} + phase) with sqrt_n_exp = t.
CycNum path_amplitude(const Model& model, const TPath& path, const ExactState& psi);
std::complex<double> path_amplitude(const Model& model, const TPath& path, const FloatState& psi);

/// Phases p that a path from i to f can carry: all of Z_n for odd n, the
/// residues of parity (i - f) mod 2 in Z_2n for even n.
std::vector<int> admissible_phases(const Model& model, Site i, Site f);
bool is_admissible_phase(const Model& model, Site i, Site f, int p);

}  // namespace hopper
