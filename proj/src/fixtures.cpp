#include "hopper/fixtures.hpp"

#include <string_view>

namespace hopper::fixtures {
namespace {

Event from_strings(int n, std::initializer_list<std::string_view> words) {
  std::vector<TPath> paths;
  int time = 0;
  for (auto w : words) {
    std::vector<Site> sites;
    for (char c : w) {
      sites.push_back(c - '0');
    }
    time = static_cast<int>(sites.size()) - 1;
    paths.emplace_back(std::move(sites));
  }
  return Event(Model(n), time, std::move(paths));
}

}  // namespace

Event event_a() { return from_strings(2, {"000", "010"}); }

Event event_b() { return from_strings(5, {"01203", "00103", "00203", "00123", "00003"}); }

Event event_c() { return from_strings(3, {"000", "010", "120"}); }

ExactState state_c() { return {{1, 1, 0}, {1, 0, 0}}; }

Event event_e() { return from_strings(2, {"0010", "0011", "0000", "0101"}); }

ExactState state_e() { return {{1, 0}, {0, 0}}; }

std::vector<Fixture> all() {
  return {{"A", event_a(), std::nullopt},
          {"B", event_b(), std::nullopt},
          {"C", event_c(), state_c()},
          {"E", event_e(), state_e()}};
}

std::optional<std::string> label_of(const Event& e) {
  for (const auto& fx : all()) {
    if (fx.event.model() == e.model() && fx.event == e) {
      return fx.label;
    }
  }
  return std::nullopt;
}

}  // namespace hopper::fixtures
