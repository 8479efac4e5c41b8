#include "hopper/events.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "hopper/errors.hpp"

namespace hopper {
namespace {

void require_same_model(const Event& a, const Event& b) {
  if (a.model() != b.model()) {
    throw PreconditionError("events belong to different models (n=" + std::to_string(a.model().n()) +
                            " vs n=" + std::to_string(b.model().n()) + ")");
  }
}

void check_limits(int time, const EventLimits& limits) {
  if (time > limits.max_time) {
    throw LimitError("event time " + std::to_string(time) + " exceeds configured maximum " +
                     std::to_string(limits.max_time));
  }
}

void check_size(double count, const EventLimits& limits) {
  if (count > static_cast<double>(limits.max_paths)) {
    throw LimitError("explicit path set would hold " + std::to_string(count) +
                     " paths, above the configured cap");
  }
}

double ipow(int base, int exp) {
  double out = 1.0;
  for (int k = 0; k < exp; ++k) {
    out *= base;
  }
  return out;
}

}  // namespace

Event::Event(Model model, int time, std::vector<TPath> paths)
    : model_(model), time_(time), paths_(std::move(paths)) {
  if (time < 0) {
    throw PreconditionError("event time must be non-negative");
  }
  for (const auto& p : paths_) {
    validate(model_, p);
    if (p.time() != time_) {
      throw PreconditionError("every path of an event must have length t+1 = " +
                              std::to_string(time_ + 1));
    }
  }
  std::sort(paths_.begin(), paths_.end());
  paths_.erase(std::unique(paths_.begin(), paths_.end()), paths_.end());
}

Event Event::empty(const Model& model, int time) { return Event(model, time, {}); }

Event Event::full(const Model& model, int time, const EventLimits& limits) {
  std::vector<TPath> roots;
  for (Site i = 0; i < model.n(); ++i) {
    roots.push_back(TPath{i});
  }
  return refine(Event(model, 0, std::move(roots)), time, limits);
}

bool Event::contains(const TPath& path) const {
  if (path.time() < time_) {
    throw PreconditionError("membership test needs at least t+1 sites");
  }
  const TPath key = path.time() == time_ ? path : path.prefix(time_);
  return std::binary_search(paths_.begin(), paths_.end(), key);
}

Event cylinder(const Model& model, const TPath& path) { return Event(model, path.time(), {path}); }

Event refine(const Event& e, int t_new, const EventLimits& limits) {
  if (t_new < e.time()) {
    throw PreconditionError("cannot refine to an earlier time");
  }
  if (t_new == e.time()) {
    return e;
  }
  check_limits(t_new, limits);
  check_size(static_cast<double>(e.size()) * ipow(e.model().n(), t_new - e.time()), limits);
  std::vector<TPath> current = e.paths();
  for (int t = e.time(); t < t_new; ++t) {
    std::vector<TPath> next;
    next.reserve(current.size() * static_cast<std::size_t>(e.model().n()));
    for (const auto& p : current) {
      for (Site j = 0; j < e.model().n(); ++j) {
        next.push_back(p.extended(j));
      }
    }
    current = std::move(next);
  }
  return Event(e.model(), t_new, std::move(current));
}

Event event_union(const Event& a, const Event& b, const EventLimits& limits) {
  require_same_model(a, b);
  const int t = std::max(a.time(), b.time());
  const Event ra = refine(a, t, limits);
  const Event rb = refine(b, t, limits);
  std::vector<TPath> out;
  std::set_union(ra.paths().begin(), ra.paths().end(), rb.paths().begin(), rb.paths().end(),
                 std::back_inserter(out));
  return Event(a.model(), t, std::move(out));
}

Event intersect(const Event& a, const Event& b, const EventLimits& limits) {
  require_same_model(a, b);
  const int t = std::max(a.time(), b.time());
  const Event ra = refine(a, t, limits);
  const Event rb = refine(b, t, limits);
  std::vector<TPath> out;
  std::set_intersection(ra.paths().begin(), ra.paths().end(), rb.paths().begin(),
                        rb.paths().end(), std::back_inserter(out));
  return Event(a.model(), t, std::move(out));
}

Event complement(const Event& e, const EventLimits& limits) {
  const Event all = Event::full(e.model(), e.time(), limits);
  std::vector<TPath> out;
  std::set_difference(all.paths().begin(), all.paths().end(), e.paths().begin(), e.paths().end(),
                      std::back_inserter(out));
  return Event(e.model(), e.time(), std::move(out));
}

DefiningTime defining_time(const Event& e) {
  if (e.is_empty()) {
    return {0, Event::empty(e.model(), 0)};
  }
  const auto n = static_cast<std::size_t>(e.model().n());
  std::vector<TPath> paths = e.paths();
  int t = e.time();
  // Sorted order puts the n extensions of a prefix next to each other, last site 0..n-1.
  while (t > 0) {
    if (paths.size() % n != 0) {
      break;
    }
    std::vector<TPath> parents;
    parents.reserve(paths.size() / n);
    bool complete = true;
    for (std::size_t g = 0; g < paths.size() && complete; g += n) {
      const TPath parent = paths[g].prefix(t - 1);
      for (std::size_t j = 0; j < n; ++j) {
        const TPath& child = paths[g + j];
        if (child.back() != static_cast<Site>(j) || child.prefix(t - 1) != parent) {
          complete = false;
          break;
        }
      }
      parents.push_back(parent);
    }
    if (!complete) {
      break;
    }
    paths = std::move(parents);
    --t;
  }
  return {t, Event(e.model(), t, std::move(paths))};
}

Event canonical(const Event& e) { return defining_time(e).canonical; }

bool operator==(const Event& a, const Event& b) {
  if (a.model() != b.model()) {
    return false;
  }
  const Event ca = canonical(a);
  const Event cb = canonical(b);
  return ca.time() == cb.time() && ca.paths() == cb.paths();
}

bool is_subset(const Event& a, const Event& b, const EventLimits& limits) {
  require_same_model(a, b);
  const int t = std::max(a.time(), b.time());
  const Event ra = refine(a, t, limits);
  const Event rb = refine(b, t, limits);
  return std::includes(rb.paths().begin(), rb.paths().end(), ra.paths().begin(), ra.paths().end());
}

std::vector<TPath> restrict_final(const Event& e, Site f) {
  if (!e.model().valid_site(f)) {
    throw PreconditionError("final site out of range");
  }
  std::vector<TPath> out;
  std::copy_if(e.paths().begin(), e.paths().end(), std::back_inserter(out),
               [f](const TPath& p) { return p.back() == f; });
  return out;
}

std::vector<std::size_t> initial_path_counts(const Event& e) {
  const Event c = canonical(e);
  std::vector<std::size_t> counts(static_cast<std::size_t>(e.model().n()), 0);
  for (const auto& p : c.paths()) {
    ++counts[static_cast<std::size_t>(p.front())];
  }
  return counts;
}

std::vector<Site> initial_sites(const Event& e) {
  const DefiningTime d = defining_time(e);
  const auto counts = initial_path_counts(d.canonical);
  const double all = ipow(e.model().n(), d.time);
  std::vector<Site> out;
  for (Site i = 0; i < e.model().n(); ++i) {
    if (static_cast<double>(counts[static_cast<std::size_t>(i)]) == all) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace hopper
