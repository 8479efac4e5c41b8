#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopper/events.hpp"
#include "hopper/model.hpp"

namespace hopper::fixtures {

/// n = 2: {000, 010}. Null for every initial state.
Event event_a();
/// n = 5: {01203, 00103, 00203, 00123, 00003}. Null for every initial state.
Event event_b();
/// n = 3: {000, 010, 120}. Null under state_c() only.
Event event_c();
ExactState state_c();
/// n = 2, t_E = 3: Cyl(001) u Cyl(0000) u Cyl(0101). Null for psi = (1, 0).
Event event_e();
ExactState state_e();

struct Fixture {
  std::string label;
  Event event;
  std::optional<ExactState> state;
};

std::vector<Fixture> all();

/// Label of the built-in fixture equal to `e` (as a set of histories), if any.
std::optional<std::string> label_of(const Event& e);

}  // namespace hopper::fixtures
