// qmt-hopper: command-line front end for the n-site hopper library.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hopper/coevents.hpp"
#include "hopper/errors.hpp"
#include "hopper/events.hpp"
#include "hopper/fixtures.hpp"
#include "hopper/io.hpp"
#include "hopper/measure.hpp"
#include "hopper/spectral.hpp"
#include "hopper/stymie.hpp"

using namespace hopper;
using io::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kPrecondition = 3, kLimits = 4 };

struct RunConfig {
  std::string format = "json";
  std::string output;
  int t_max_config = 40;
  std::uint64_t seed = 20240101;

  std::string event_path;
  std::string state_path;
  std::string cert_path;
  std::string classical_path;
  double eps_null = 1e-18;
  int m_max = 4;
  int big_m_max = 8;
  std::size_t cap = 1'000'000;
  std::size_t enum_cap = 16;
  int i_check = 0;
  int n = 2;
  int t_max = 2;
  int float_checks = 0;
};

std::string path_string(const TPath& p) {
  std::string s;
  for (Site x : p.sites()) {
    s += (p.size() > 0 && x > 9) ? "(" + std::to_string(x) + ")" : std::to_string(x);
  }
  return s;
}

std::string event_summary(const Event& e) {
  std::ostringstream out;
  const auto label = fixtures::label_of(e);
  if (label) {
    out << "fixture " << *label << ", ";
  }
  out << "n=" << e.model().n() << ", t=" << e.time() << ", " << e.size() << " paths";
  return out.str();
}

// Flattens top-level scalars (and arrays of scalars) into key,value lines.
std::string csv_of(const json& j) {
  std::ostringstream out;
  out << "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_primitive()) {
      out << it.key() << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
      out << it.key() << ",";
      for (std::size_t k = 0; k < v.size(); ++k) {
        out << (k ? ";" : "") << v[k].dump();
      }
      out << "\n";
    }
  }
  return out.str();
}

class Emitter {
 public:
  explicit Emitter(const RunConfig& cfg) : cfg_(cfg) {}

  void emit(const json& j, const std::string& pretty) const {
    std::string text;
    if (cfg_.format == "pretty") {
      text = pretty;
    } else if (cfg_.format == "csv") {
      text = csv_of(j);
    } else {
      text = j.dump(2) + "\n";
    }
    if (cfg_.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg_.output);
      if (!out) {
        throw PreconditionError("cannot write " + cfg_.output);
      }
      out << text;
    }
  }

 private:
  const RunConfig& cfg_;
};

Event load_event(const RunConfig& cfg) {
  Event e = io::event_from_json(io::read_file(cfg.event_path));
  if (e.time() > cfg.t_max_config) {
    throw LimitError("event time " + std::to_string(e.time()) + " exceeds t_max_config " +
                     std::to_string(cfg.t_max_config));
  }
  return e;
}

io::StateSpec load_state(const RunConfig& cfg) { return io::state_from_json(io::read_file(cfg.state_path)); }

int cmd_measure(const RunConfig& cfg) {
  const Event e = load_event(cfg);
  const io::StateSpec spec = load_state(cfg);
  MeasureOptions options;
  options.eps_null = cfg.eps_null;
  options.c_abs_sq = spec.c_abs_sq;
  const MeasureResult r = measure(e, spec.psi, options);
  json j = io::to_json(r);
  if (const auto label = fixtures::label_of(e)) {
    j["fixture"] = *label;
  }
  std::ostringstream pretty;
  pretty << "event:  " << event_summary(e) << "\n"
         << "mode:   " << r.mode() << "\n"
         << "mu:     " << r.numeric << (r.is_zero ? (r.thresholded ? "  (null, below threshold)" : "  (exact zero)") : "")
         << "\n"
         << "per final site:";
  for (double v : r.per_final_site) {
    pretty << " " << v;
  }
  pretty << "\n";
  Emitter(cfg).emit(j, pretty.str());
  return kOk;
}

int cmd_null_check(const RunConfig& cfg) {
  const Event e = load_event(cfg);
  json j = {{"schema", io::kSchema}};
  std::ostringstream pretty;
  pretty << "event:  " << event_summary(e) << "\n";
  if (cfg.state_path.empty()) {
    const bool null = is_null_universal(e);
    j["criterion"] = "universal";
    j["is_null"] = null;
    pretty << "null for every initial state: " << (null ? "yes" : "no") << "\n";
  } else {
    const io::StateSpec spec = load_state(cfg);
    MeasureOptions options;
    options.eps_null = cfg.eps_null;
    options.c_abs_sq = spec.c_abs_sq;
    const MeasureResult r = measure(e, spec.psi, options);
    j["criterion"] = "state";
    j["is_null"] = r.is_zero;
    j["mode"] = r.mode();
    j["thresholded"] = r.thresholded;
    pretty << "null under the given state: " << (r.is_zero ? "yes" : "no")
           << (r.thresholded ? " (float threshold)" : "") << "\n";
  }
  if (const auto label = fixtures::label_of(e)) {
    j["fixture"] = *label;
  }
  Emitter(cfg).emit(j, pretty.str());
  return kOk;
}

// Max mu(F) over random normalized float states, from the phase counts of F.
double float_check(const StymieCertificate& cert, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  const int n = cert.model().n();
  for (int s = 0; s < count; ++s) {
    FloatState psi;
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      psi.psi.emplace_back(gauss(rng), gauss(rng));
      norm += std::norm(psi.psi.back());
    }
    for (auto& z : psi.psi) {
      z /= std::sqrt(norm);
    }
    double mu = 0.0;
    for (auto a : amplitude_sums(cert.f_counts, psi)) {
      mu += std::norm(a);
    }
    worst = std::max(worst, mu);
  }
  return worst;
}

std::string certificate_pretty(const StymieCertificate& cert, const VerifyReport* report) {
  std::ostringstream out;
  out << "base event: " << event_summary(cert.base) << "\n"
      << "kind:       " << (cert.kind == StymieKind::Universal ? "universal" : "initial") << "\n"
      << "m:          " << cert.m << "\n";
  if (cert.kind == StymieKind::Initial) {
    out << "M:          " << cert.big_m << "\n"
        << "i_check:    " << cert.i_check << "\n";
  }
  out << "horizon:    " << cert.horizon << "\n"
      << "|G|:        " << cert.g_size.get_str() << " in " << cert.generators.size() << " generators\n"
      << "mu(F) = 0:  " << (cert.mu_is_zero ? "yes" : "no") << "\n";
  if (report) {
    out << "verified:   " << (report->ok ? "yes" : "no: " + report->reason)
        << (report->materialized ? " (explicit paths)" : " (count arithmetic)") << "\n";
  }
  return out.str();
}

int emit_certificate(const RunConfig& cfg, const StymieCertificate& cert) {
  StymieOptions options;
  options.materialize_cap = cfg.cap;
  const VerifyReport report = verify_report(cert, options);
  json j = io::to_json(cert);
  j["verified"] = report.ok;
  if (cfg.float_checks > 0) {
    j["float_checks"] = {{"count", cfg.float_checks},
                         {"seed", cfg.seed},
                         {"max_mu_unnormalized", float_check(cert, cfg.float_checks, cfg.seed)}};
  }
  Emitter(cfg).emit(j, certificate_pretty(cert, &report));
  return report.ok ? kOk : kVerifyFailed;
}

int cmd_stymie(const RunConfig& cfg) {
  StymieOptions options{cfg.m_max, cfg.big_m_max, cfg.cap};
  return emit_certificate(cfg, build_null_superset(load_event(cfg), options));
}

int cmd_stymie_initial(const RunConfig& cfg) {
  const io::StateSpec spec = load_state(cfg);
  const auto* exact = std::get_if<ExactState>(&spec.psi);
  if (!exact) {
    throw PreconditionError("initial-position stymieing needs an exact state");
  }
  StymieOptions options{cfg.m_max, cfg.big_m_max, cfg.cap};
  return emit_certificate(cfg, build_null_superset_initial(load_event(cfg), *exact, cfg.i_check, options));
}

int cmd_verify(const RunConfig& cfg) {
  const StymieCertificate cert = io::certificate_from_json(io::read_file(cfg.cert_path));
  StymieOptions options;
  options.materialize_cap = cfg.cap;
  const VerifyReport report = verify_report(cert, options);
  json j = {{"schema", io::kSchema},
            {"ok", report.ok},
            {"materialized", report.materialized},
            {"reason", report.reason}};
  Emitter(cfg).emit(j, certificate_pretty(cert, &report));
  return report.ok ? kOk : kVerifyFailed;
}

TruncatedSystem load_system(const RunConfig& cfg, const Model& model) {
  if (!cfg.classical_path.empty()) {
    const json j = io::read_file(cfg.classical_path);
    std::vector<double> probs;
    try {
      probs = j.at("probs").get<std::vector<double>>();
    } catch (const json::exception& ex) {
      throw ParseError(std::string("classical fixture: ") + ex.what());
    }
    return TruncatedSystem::classical(model, cfg.t_max, std::move(probs));
  }
  if (cfg.state_path.empty()) {
    throw PreconditionError("give --state or --classical");
  }
  const io::StateSpec spec = load_state(cfg);
  MeasureOptions options;
  options.eps_null = cfg.eps_null;
  options.c_abs_sq = spec.c_abs_sq;
  return TruncatedSystem::quantum(model, cfg.t_max, spec.psi, options);
}

int cmd_coevents(const RunConfig& cfg) {
  const TruncatedSystem sys = load_system(cfg, Model(cfg.n));
  const auto supports = minimal_preclusive_supports(sys, cfg.enum_cap);
  const json j = io::supports_json(sys, supports);
  std::ostringstream pretty;
  pretty << "n=" << cfg.n << ", t_max=" << cfg.t_max << ", " << sys.size() << " histories, "
         << sys.maximal_null_events(cfg.enum_cap).size() << " maximal null events\n"
         << supports.size() << " minimal preclusive supports:\n";
  for (const auto& c : supports) {
    pretty << " ";
    for (std::size_t k = 0; k < sys.size(); ++k) {
      if (c.support >> k & 1) {
        pretty << " " << path_string(sys.history(k));
      }
    }
    pretty << "\n";
  }
  Emitter(cfg).emit(j, pretty.str());
  return kOk;
}

int cmd_stymied(const RunConfig& cfg) {
  const Event e = load_event(cfg);
  const TruncatedSystem sys = load_system(cfg, e.model());
  const HistorySet mask = sys.from_event(e);
  const StymiedResult r = is_stymied(mask, sys);
  json j = io::stymied_json(sys, mask, r);
  if (const auto label = fixtures::label_of(e)) {
    j["fixture"] = *label;
  }
  std::ostringstream pretty;
  pretty << "event:   " << event_summary(e) << "\n"
         << "stymied: " << (r.stymied ? "yes" : "no") << (r.self_null ? " (event is itself null)" : "") << "\n";
  if (r.witness) {
    pretty << "witness:";
    for (std::size_t k = 0; k < sys.size(); ++k) {
      if (*r.witness >> k & 1) {
        pretty << " " << path_string(sys.history(k));
      }
    }
    pretty << "\n";
  }
  Emitter(cfg).emit(j, pretty.str());
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg) {
  const Model model(cfg.n);
  const json j = io::spectrum_json(model);
  std::ostringstream pretty;
  pretty.precision(12);
  pretty << "n=" << cfg.n << "\n";
  for (const auto& e : j["eigenpairs"]) {
    pretty << "  lambda_" << e["j"].get<int>() << " = " << e["value"]["re"].get<double>() << " + "
           << e["value"]["im"].get<double>() << "i   (residual " << e["residual"].get<double>() << ")\n";
  }
  const auto& p = j["periodicity"];
  pretty << "U^" << p["short_period"].get<int>() << " = " << p["short_value"].get<std::string>() << ": "
         << (p["short_verified"].get<bool>() ? "verified" : "FAILED") << "\n"
         << "U^" << p["full_period"].get<int>() << " = 1: " << (p["full_verified"].get<bool>() ? "verified" : "FAILED")
         << "\n";
  Emitter(cfg).emit(j, pretty.str());
  return kOk;
}

int cmd_fixtures(const RunConfig& cfg) {
  json j = {{"schema", io::kSchema}};
  std::ostringstream pretty;
  for (const auto& fx : fixtures::all()) {
    json entry = {{"event", io::to_json(fx.event)}};
    if (fx.state) {
      entry["state"] = io::to_json(*fx.state);
    }
    j[fx.label] = entry;
    pretty << fx.label << ": n=" << fx.event.model().n() << ", t=" << fx.event.time() << ",";
    for (const auto& p : fx.event.paths()) {
      pretty << " " << path_string(p);
    }
    pretty << "\n";
  }
  Emitter(cfg).emit(j, pretty.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum measures, null events and stymieing in the n-site hopper"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write output to this file");
  app.add_option("--t-max-config", cfg.t_max_config, "Largest accepted event time")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random sampling")->capture_default_str();

  auto pos_int = CLI::PositiveNumber;
  auto add_event = [&](CLI::App* sub) { sub->add_option("-e,--event", cfg.event_path, "Event JSON")->required(); };
  auto add_eps = [&](CLI::App* sub) {
    sub->add_option("--eps", cfg.eps_null, "Float-mode nullity threshold")->check(CLI::PositiveNumber);
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--m-max", cfg.m_max, "Largest m tried")->check(pos_int)->capture_default_str();
    sub->add_option("--cap", cfg.cap, "Largest |G| verified path by path")->check(pos_int)->capture_default_str();
    sub->add_option("--float-checks", cfg.float_checks, "Also evaluate mu(F) under this many random states")
        ->check(CLI::NonNegativeNumber);
  };

  auto* measure_cmd = app.add_subcommand("measure", "Quantum measure of an event");
  add_event(measure_cmd);
  measure_cmd->add_option("-s,--state", cfg.state_path, "Initial state JSON")->required();
  add_eps(measure_cmd);

  auto* null_cmd = app.add_subcommand("null-check", "Decide nullity (universal without --state)");
  add_event(null_cmd);
  null_cmd->add_option("-s,--state", cfg.state_path, "Initial state JSON");
  add_eps(null_cmd);

  auto* stymie_cmd = app.add_subcommand("stymie", "Build a null superset valid for every state");
  add_event(stymie_cmd);
  add_limits(stymie_cmd);

  auto* initial_cmd = app.add_subcommand("stymie-initial", "Null superset of an initial-position event");
  add_event(initial_cmd);
  initial_cmd->add_option("-s,--state", cfg.state_path, "Exact initial state JSON")->required();
  initial_cmd->add_option("--i-check", cfg.i_check, "The initial site whose cylinder is missing")->required();
  add_limits(initial_cmd);
  initial_cmd->add_option("--M-max", cfg.big_m_max, "Largest M tried")->check(pos_int)->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate (exit 1 on failure)");
  verify_cmd->add_option("-c,--cert", cfg.cert_path, "Certificate JSON")->required();
  verify_cmd->add_option("--cap", cfg.cap, "Largest |G| verified path by path")->check(pos_int);

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--t-max", cfg.t_max, "Last time step of the truncated system")
        ->check(CLI::NonNegativeNumber)
        ->required();
    sub->add_option("-s,--state", cfg.state_path, "Initial state JSON");
    sub->add_option("--classical", cfg.classical_path, "JSON with \"probs\", one per history");
    add_eps(sub);
  };
  auto* coevents_cmd = app.add_subcommand("coevents", "Minimal preclusive multiplicative co-events");
  coevents_cmd->add_option("-n", cfg.n, "Number of sites")->check(CLI::Range(2, 64))->required();
  add_system(coevents_cmd);
  coevents_cmd->add_option("--cap", cfg.enum_cap, "Largest history space enumerated")->check(pos_int);

  auto* stymied_cmd = app.add_subcommand("stymied", "Is an event contained in a null event?");
  add_event(stymied_cmd);
  add_system(stymied_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigensystem and periodicity of U(n)");
  spectrum_cmd->add_option("-n", cfg.n, "Number of sites")->check(CLI::Range(2, 4096))->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Dump the built-in example events");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*measure_cmd) return cmd_measure(cfg);
    if (*null_cmd) return cmd_null_check(cfg);
    if (*stymie_cmd) return cmd_stymie(cfg);
    if (*initial_cmd) return cmd_stymie_initial(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*coevents_cmd) return cmd_coevents(cfg);
    if (*stymied_cmd) return cmd_stymied(cfg);
    if (*spectrum_cmd) return cmd_spectrum(cfg);
    if (*fixtures_cmd) return cmd_fixtures(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kLimits;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
