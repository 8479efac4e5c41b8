#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopper/coevents.hpp"
#include "hopper/cyclotomic.hpp"
#include "hopper/events.hpp"
#include "hopper/measure.hpp"
#include "hopper/model.hpp"
#include "hopper/spectral.hpp"
#include "hopper/stymie.hpp"

namespace hopper::io {

using nlohmann::json;

inline constexpr const char* kSchema = "qmt-hopper/1";

/// Parse failures (malformed JSON, missing or mistyped fields) throw ParseError.
json read_file(const std::string& path);

json to_json(const TPath& path);
TPath path_from_json(const json& j);

json to_json(const Event& e);
Event event_from_json(const json& j);

struct StateSpec {
  InitialState psi;
  std::optional<double> c_abs_sq;
};
json to_json(const InitialState& psi, std::optional<double> c_abs_sq = std::nullopt);
StateSpec state_from_json(const json& j);

json to_json(const CycNum& a);
CycNum cycnum_from_json(const json& j);

/// Nonzero entries only.
json to_json(const PhaseCountTable& table);
PhaseCountTable table_from_json(const Model& model, const json& j);

json to_json(const MeasureResult& r);

json to_json(const StymieCertificate& cert);
StymieCertificate certificate_from_json(const json& j);

json spectrum_json(const Model& model);

json to_json(const TruncatedSystem& sys, HistorySet a);
json supports_json(const TruncatedSystem& sys, const std::vector<Coevent>& supports);
json stymied_json(const TruncatedSystem& sys, HistorySet e, const StymiedResult& r);

}  // namespace hopper::io
