#include "hopper/coevents.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <thread>

#include "hopper/errors.hpp"

namespace hopper {
namespace {

std::complex<double> root(int p, int order) {
  return std::polar(1.0, 2.0 * std::numbers::pi * p / order);
}

}  // namespace

unsigned worker_threads() {
  if (const char* env = std::getenv("QMT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) {
      return static_cast<unsigned>(std::min<long>(v, 256));
    }
  }
  return 1;
}

TruncatedSystem::TruncatedSystem(Model model, int t_max) : model_(model), t_max_(t_max) {
  if (t_max < 0) {
    throw PreconditionError("t_max must be non-negative");
  }
  const double count = std::pow(static_cast<double>(model.n()), t_max + 1);
  if (count > 64) {
    throw LimitError("truncated history space has " + std::to_string(static_cast<long long>(count)) +
                     " histories; at most 64 are supported");
  }
  const auto total = static_cast<std::size_t>(count);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<Site> sites(static_cast<std::size_t>(t_max + 1));
    std::size_t rest = k;
    for (int s = t_max; s >= 0; --s) {
      sites[static_cast<std::size_t>(s)] = static_cast<Site>(rest % static_cast<std::size_t>(model.n()));
      rest /= static_cast<std::size_t>(model.n());
    }
    TPath path(std::move(sites));
    records_.push_back({path.front(), path.back(), path_phase(model, path)});
    histories_.push_back(std::move(path));
  }
}

TruncatedSystem TruncatedSystem::quantum(const Model& model, int t_max, const InitialState& psi,
                                         const MeasureOptions& options) {
  validate(model, psi);
  TruncatedSystem sys(model, t_max);
  sys.options_ = options;
  if (const auto* exact = std::get_if<ExactState>(&psi)) {
    sys.exact_ = *exact;
  } else {
    sys.floating_ = std::get<FloatState>(psi);
  }
  return sys;
}

TruncatedSystem TruncatedSystem::classical(const Model& model, int t_max, std::vector<double> probs) {
  TruncatedSystem sys(model, t_max);
  if (probs.size() != sys.size()) {
    throw PreconditionError("classical fixture needs one probability per history");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw PreconditionError("probabilities must be non-negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw PreconditionError("probabilities must sum to 1");
  }
  sys.classical_ = std::move(probs);
  return sys;
}

HistorySet TruncatedSystem::full() const {
  return size() == 64 ? ~HistorySet{0} : (HistorySet{1} << size()) - 1;
}

std::size_t TruncatedSystem::index_of(const TPath& path) const {
  if (path.time() != t_max_) {
    throw PreconditionError("history length does not match t_max");
  }
  validate(model_, path);
  std::size_t k = 0;
  for (Site s : path.sites()) {
    k = k * static_cast<std::size_t>(model_.n()) + static_cast<std::size_t>(s);
  }
  return k;
}

HistorySet TruncatedSystem::from_event(const Event& e) const {
  if (!(e.model() == model_)) {
    throw PreconditionError("event and system use different models");
  }
  const DefiningTime d = defining_time(e);
  if (d.time > t_max_) {
    throw PreconditionError("event is not decided by time t_max");
  }
  HistorySet out = 0;
  for (std::size_t k = 0; k < size(); ++k) {
    if (d.canonical.contains(histories_[k])) {
      out |= HistorySet{1} << k;
    }
  }
  return out;
}

Event TruncatedSystem::to_event(HistorySet a) const {
  std::vector<TPath> paths;
  for (std::size_t k = 0; k < size(); ++k) {
    if (a >> k & 1) {
      paths.push_back(histories_[k]);
    }
  }
  return Event(model_, t_max_, std::move(paths));
}

bool TruncatedSystem::is_null(HistorySet a) const {
  if (classical_) {
    for (std::size_t k = 0; k < size(); ++k) {
      if ((a >> k & 1) && (*classical_)[k] != 0.0) {
        return false;
      }
    }
    return true;
  }
  const int n = model_.n();
  const int order = model_.order();
  if (exact_) {
    std::vector<long long> coeffs(static_cast<std::size_t>(n * order), 0);
    for (std::size_t k = 0; k < size(); ++k) {
      if (a >> k & 1) {
        const Record& r = records_[k];
        const auto i = static_cast<std::size_t>(r.i);
        coeffs[static_cast<std::size_t>(r.f * order + (exact_->q[i] + r.p) % order)] += exact_->z[i];
      }
    }
    for (int f = 0; f < n; ++f) {
      const auto first = coeffs.begin() + f * order;
      if (std::all_of(first, first + order, [](long long c) { return c == 0; })) {
        continue;
      }
      CycNum sum(order);
      for (int p = 0; p < order; ++p) {
        sum.add_term(p, BigInt(static_cast<long>(first[p])));
      }
      if (!is_zero(sum)) {
        return false;
      }
    }
    return true;
  }
  return measure(a) < options_.eps_null;
}

std::complex<double> TruncatedSystem::decoherence(HistorySet a, HistorySet b) const {
  if (classical_) {
    double p = 0.0;
    for (std::size_t k = 0; k < size(); ++k) {
      if ((a & b) >> k & 1) {
        p += (*classical_)[k];
      }
    }
    return p;
  }
  const int n = model_.n();
  const int order = model_.order();
  std::vector<std::complex<double>> sum_a(static_cast<std::size_t>(n));
  std::vector<std::complex<double>> sum_b(static_cast<std::size_t>(n));
  double c_abs_sq = 1.0;
  if (exact_) {
    double norm = 0.0;
    for (long z : exact_->z) {
      norm += static_cast<double>(z) * static_cast<double>(z);
    }
    c_abs_sq = options_.c_abs_sq.value_or(1.0 / norm);
  }
  for (std::size_t k = 0; k < size(); ++k) {
    const Record& r = records_[k];
    const auto i = static_cast<std::size_t>(r.i);
    const std::complex<double> amp =
        exact_ ? static_cast<double>(exact_->z[i]) * root(exact_->q[i] + r.p, order)
               : floating_->psi[i] * root(r.p, order);
    if (a >> k & 1) {
      sum_a[static_cast<std::size_t>(r.f)] += amp;
    }
    if (b >> k & 1) {
      sum_b[static_cast<std::size_t>(r.f)] += amp;
    }
  }
  std::complex<double> d = 0.0;
  for (int f = 0; f < n; ++f) {
    d += sum_a[static_cast<std::size_t>(f)] * std::conj(sum_b[static_cast<std::size_t>(f)]);
  }
  return d * c_abs_sq / std::pow(static_cast<double>(n), t_max_);
}

double TruncatedSystem::measure(HistorySet a) const { return decoherence(a, a).real(); }

const std::vector<HistorySet>& TruncatedSystem::maximal_null_events(std::size_t cap) const {
  if (maximal_null_) {
    return *maximal_null_;
  }
  if (size() > cap) {
    throw LimitError("exhaustive scan needs at most " + std::to_string(cap) + " histories, have " +
                     std::to_string(size()));
  }
  const HistorySet total = HistorySet{1} << size();
  const unsigned threads = std::max(1u, std::min<unsigned>(worker_threads(), static_cast<unsigned>(total)));
  std::vector<std::vector<HistorySet>> found(threads);
  auto scan = [&](unsigned w) {
    for (HistorySet a = w; a < total; a += threads) {
      if (is_null(a)) {
        found[w].push_back(a);
      }
    }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back(scan, w);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  std::vector<HistorySet> nulls;
  for (auto& part : found) {
    nulls.insert(nulls.end(), part.begin(), part.end());
  }
  std::sort(nulls.begin(), nulls.end(), [](HistorySet x, HistorySet y) {
    const int cx = std::popcount(x);
    const int cy = std::popcount(y);
    return cx != cy ? cx > cy : x < y;
  });
  std::vector<HistorySet> maximal;
  for (HistorySet a : nulls) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                     [a](HistorySet m) { return (a & ~m) == 0; });
    if (!covered) {
      maximal.push_back(a);
    }
  }
  maximal_null_ = std::move(maximal);
  return *maximal_null_;
}

int evaluate(const Coevent& phi, HistorySet a) { return (phi.support & ~a) == 0 ? 1 : 0; }

bool is_preclusive(const Coevent& phi, const TruncatedSystem& sys, std::size_t cap) {
  const auto& maximal = sys.maximal_null_events(cap);
  return std::none_of(maximal.begin(), maximal.end(),
                      [&](HistorySet m) { return evaluate(phi, m) == 1; });
}

std::vector<Coevent> minimal_preclusive_supports(const TruncatedSystem& sys, std::size_t cap) {
  const auto& maximal = sys.maximal_null_events(cap);
  const std::size_t n = sys.size();
  std::vector<Coevent> out;
  for (std::size_t k = 1; k <= n; ++k) {
    // Masks with k bits set, in increasing order (Gosper's hack).
    HistorySet s = (HistorySet{1} << k) - 1;
    const HistorySet limit = HistorySet{1} << n;
    while (s < limit) {
      const bool has_smaller = std::any_of(out.begin(), out.end(), [s](const Coevent& c) {
        return (c.support & ~s) == 0;
      });
      if (!has_smaller &&
          std::none_of(maximal.begin(), maximal.end(), [s](HistorySet m) { return (s & ~m) == 0; })) {
        out.push_back({s});
      }
      const HistorySet c = s & (~s + 1);
      const HistorySet r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return out;
}

StymiedResult is_stymied(HistorySet e, const TruncatedSystem& sys) {
  StymiedResult result;
  if ((e & ~sys.full()) != 0) {
    throw PreconditionError("event has bits outside the history space");
  }
  result.self_null = sys.is_null(e);
  if (result.self_null) {
    result.stymied = true;
    result.witness = e;
    return result;
  }
  if (sys.is_classical()) {
    // Every superset of a set with positive probability has positive probability.
    return result;
  }

  const Model& model = sys.model();
  const int n = model.n();
  HistorySet witness = e;
  for (Site f = 0; f < n; ++f) {
    // Histories ending at f grouped by (i, p); members in index order.
    std::map<std::pair<Site, int>, std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < sys.size(); ++k) {
      const TPath& h = sys.history(k);
      if (h.back() == f) {
        classes[{h.front(), path_phase(model, h)}].push_back(k);
      }
    }
    HistorySet ending_here = 0;
    for (const auto& [key, members] : classes) {
      for (std::size_t k : members) {
        ending_here |= HistorySet{1} << k;
      }
    }
    if (sys.is_null(e & ending_here)) {
      continue;
    }

    struct Class {
      std::vector<std::size_t> free;  // members outside E
      HistorySet in_e = 0;
    };
    std::vector<Class> cls;
    for (const auto& [key, members] : classes) {
      Class c;
      for (std::size_t k : members) {
        if (e >> k & 1) {
          c.in_e |= HistorySet{1} << k;
        } else {
          c.free.push_back(k);
        }
      }
      // Histories with zero amplitude never change a sum.
      const HistorySet probe = HistorySet{1} << members.front();
      if (sys.is_null(probe)) {
        c.free.clear();
      }
      cls.push_back(std::move(c));
    }

    double leaves = 1.0;
    for (const auto& c : cls) {
      leaves *= static_cast<double>(c.free.size() + 1);
    }
    if (leaves > 5e7) {
      throw LimitError("stymied search space too large at final site " + std::to_string(f));
    }

    std::vector<std::size_t> take(cls.size(), 0);
    std::optional<std::vector<std::size_t>> best;
    std::size_t best_total = 0;
    auto chosen = [&](const std::vector<std::size_t>& counts) {
      HistorySet a = e & ending_here;
      for (std::size_t c = 0; c < cls.size(); ++c) {
        for (std::size_t j = 0; j < counts[c]; ++j) {
          a |= HistorySet{1} << cls[c].free[j];
        }
      }
      return a;
    };
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t c, std::size_t added) {
      if (best && added >= best_total) {
        return;
      }
      if (c == cls.size()) {
        if (added > 0 && sys.is_null(chosen(take))) {
          best = take;
          best_total = added;
        }
        return;
      }
      for (std::size_t x = 0; x <= cls[c].free.size(); ++x) {
        take[c] = x;
        dfs(c + 1, added + x);
      }
      take[c] = 0;
    };
    dfs(0, 0);
    if (!best) {
      return result;
    }
    witness |= chosen(*best);
  }
  result.stymied = true;
  result.witness = witness;
  return result;
}

}  // namespace hopper
