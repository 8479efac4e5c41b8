#include "hopper/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hopper/errors.hpp"

namespace hopper {

Model::Model(int n) : n_(n) {
  if (n < 2) {
    throw PreconditionError("hopper needs n >= 2 sites, got " + std::to_string(n));
  }
}

TPath::TPath(std::vector<Site> sites) : sites_(std::move(sites)) {}
TPath::TPath(std::initializer_list<Site> sites) : sites_(sites) {}

TPath TPath::extended(Site s) const {
  TPath out = *this;
  out.sites_.push_back(s);
  return out;
}

TPath TPath::prefix(int time) const {
  return TPath(std::vector<Site>(sites_.begin(), sites_.begin() + time + 1));
}

TPath TPath::joined(const TPath& tail) const {
  if (tail.empty() || tail.front() != back()) {
    throw PreconditionError("joined segment must start where the path ends");
  }
  TPath out = *this;
  out.sites_.insert(out.sites_.end(), tail.sites_.begin() + 1, tail.sites_.end());
  return out;
}

TPath TPath::reversed() const { return TPath(std::vector<Site>(sites_.rbegin(), sites_.rend())); }

void validate(const Model& model, const TPath& path) {
  if (path.empty()) {
    throw PreconditionError("a t-path needs at least one site");
  }
  for (Site s : path.sites()) {
    if (!model.valid_site(s)) {
      throw PreconditionError("site " + std::to_string(s) + " out of range for n=" +
                              std::to_string(model.n()));
    }
  }
}

void validate(const Model& model, const ExactState& state) {
  const auto n = static_cast<std::size_t>(model.n());
  if (state.z.size() != n || state.q.size() != n) {
    throw PreconditionError("exact state needs n entries in z and q");
  }
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    any = any || state.z[i] != 0;
    if (state.q[i] < 0 || state.q[i] >= model.order()) {
      throw PreconditionError("phase power q must lie in [0, n')");
    }
  }
  if (!any) {
    throw PreconditionError("exact state needs at least one nonzero z");
  }
}

void validate(const Model& model, const FloatState& state) {
  if (state.psi.size() != static_cast<std::size_t>(model.n())) {
    throw PreconditionError("float state needs n amplitudes");
  }
  double norm = 0.0;
  for (const auto& a : state.psi) {
    norm += std::norm(a);
  }
  if (std::abs(norm - 1.0) > 1e-9) {
    throw PreconditionError("float state must be normalized, sum |psi|^2 = " + std::to_string(norm));
  }
}

void validate(const Model& model, const InitialState& state) {
  std::visit([&](const auto& s) { validate(model, s); }, state);
}

FloatState normalized(const Model& model, const ExactState& state) {
  validate(model, state);
  double norm = 0.0;
  for (long z : state.z) {
    norm += static_cast<double>(z) * static_cast<double>(z);
  }
  FloatState out;
  for (std::size_t i = 0; i < state.z.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * state.q[i] / model.order();
    out.psi.push_back(std::polar(static_cast<double>(state.z[i]) / std::sqrt(norm), angle));
  }
  return out;
}

int transfer_phase(const Model& model, Site j, Site k) {
  if (!model.valid_site(j) || !model.valid_site(k)) {
    throw PreconditionError("transfer between sites out of range");
  }
  const long long d = j - k;
  return static_cast<int>((d * d) % model.order());
}

int path_phase(const Model& model, const TPath& path) {
  validate(model, path);
  long long p = 0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const long long d = path[k] - path[k + 1];
    p += d * d;
  }
  return static_cast<int>(p % model.order());
}

CycNum path_amplitude(const Model& model, const TPath& path, const ExactState& psi) {
  validate(model, psi);
  const auto i = static_cast<std::size_t>(path.front());
  CycNum out(model.order(), path.time());
  out.add_term(psi.q[i] + path_phase(model, path), BigInt(psi.z[i]));
  return out;
}

std::complex<double> path_amplitude(const Model& model, const TPath& path, const FloatState& psi) {
  validate(model, psi);
  const double angle = 2.0 * std::numbers::pi * path_phase(model, path) / model.order();
  return psi.psi[static_cast<std::size_t>(path.front())] * std::polar(1.0, angle) *
         std::pow(static_cast<double>(model.n()), -0.5 * path.time());
}

bool is_admissible_phase(const Model& model, Site i, Site f, int p) {
  if (p < 0 || p >= model.order()) {
    return false;
  }
  if (!model.is_even()) {
    return true;
  }
  return (p + i + f) % 2 == 0;
}

std::vector<int> admissible_phases(const Model& model, Site i, Site f) {
  std::vector<int> out;
  for (int p = 0; p < model.order(); ++p) {
    if (is_admissible_phase(model, i, f, p)) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace hopper
