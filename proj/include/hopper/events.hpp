#pragma once

#include <cstddef>
#include <vector>

#include "hopper/model.hpp"

namespace hopper {

/// Bounds on explicit path-set representations. Measures use dynamic
/// programming and are not subject to these.
struct EventLimits {
  int max_time = 40;
  std::size_t max_paths = std::size_t{1} << 24;
};

/// A time-finite event: the union of the cylinder sets of `paths`, all of
/// which are t-paths at the representation time `time()`. Paths are kept
/// sorted and unique.
class Event {
 public:
  Event(Model model, int time, std::vector<TPath> paths);

  static Event empty(const Model& model, int time = 0);
  /// Omega, represented at `time`.
  static Event full(const Model& model, int time = 0, const EventLimits& limits = {});

  const Model& model() const { return model_; }
  int time() const { return time_; }
  const std::vector<TPath>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  bool is_empty() const { return paths_.empty(); }

  /// True when the history beginning with `path` (at least time()+1 sites) lies in the event.
  bool contains(const TPath& path) const;

 private:
  Model model_;
  int time_;
  std::vector<TPath> paths_;
};

Event cylinder(const Model& model, const TPath& path);

/// Same event expressed at a later time; every path is replaced by its
/// n^(t_new - t) extensions.
Event refine(const Event& e, int t_new, const EventLimits& limits = {});

Event event_union(const Event& a, const Event& b, const EventLimits& limits = {});
Event intersect(const Event& a, const Event& b, const EventLimits& limits = {});
Event complement(const Event& e, const EventLimits& limits = {});

inline Event operator|(const Event& a, const Event& b) { return event_union(a, b); }
inline Event operator&(const Event& a, const Event& b) { return intersect(a, b); }
inline Event operator~(const Event& e) { return complement(e); }

struct DefiningTime {
  int time;
  Event canonical;
};

/// Least time at which the event is a union of cylinder sets, with the event
/// re-expressed there. The empty event has defining time 0.
DefiningTime defining_time(const Event& e);
Event canonical(const Event& e);

/// Event equality (same set of histories).
bool operator==(const Event& a, const Event& b);
bool is_subset(const Event& a, const Event& b, const EventLimits& limits = {});

/// Paths of the representation that end at f.
std::vector<TPath> restrict_final(const Event& e, Site f);

/// Sites i with Cyl(i) contained in the event.
std::vector<Site> initial_sites(const Event& e);

/// Number of paths of the canonical representation starting at each site.
std::vector<std::size_t> initial_path_counts(const Event& e);

}  // namespace hopper
