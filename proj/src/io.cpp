#include "hopper/io.hpp"

#include <fstream>
#include <sstream>

#include "hopper/errors.hpp"

namespace hopper::io {
namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bad field \"") + key + "\": " + ex.what());
  }
}

json big(const BigInt& v) { return v.get_str(); }

BigInt big_from(const json& j) {
  try {
    if (j.is_string()) {
      return BigInt(j.get<std::string>());
    }
    if (j.is_number_integer()) {
      return BigInt(j.get<long>());
    }
  } catch (const std::invalid_argument&) {
  }
  throw ParseError("expected a decimal integer string");
}

void check_schema(const json& j) {
  if (j.is_object() && j.contains("schema") && j["schema"] != kSchema) {
    throw ParseError("unsupported schema " + j["schema"].dump());
  }
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

json to_json(const TPath& path) { return json(std::vector<Site>(path.sites().begin(), path.sites().end())); }

TPath path_from_json(const json& j) {
  if (j.is_string()) {
    std::vector<Site> sites;
    for (char c : j.get<std::string>()) {
      if (c < '0' || c > '9') {
        throw ParseError("path strings may only contain digits");
      }
      sites.push_back(c - '0');
    }
    return TPath(std::move(sites));
  }
  if (j.is_array()) {
    try {
      return TPath(j.get<std::vector<Site>>());
    } catch (const json::exception& ex) {
      throw ParseError(std::string("bad path: ") + ex.what());
    }
  }
  throw ParseError("a path is a digit string or an array of sites");
}

json to_json(const Event& e) {
  json paths = json::array();
  for (const auto& p : e.paths()) {
    paths.push_back(to_json(p));
  }
  return {{"schema", kSchema}, {"n", e.model().n()}, {"t", e.time()}, {"paths", paths}};
}

Event event_from_json(const json& j) {
  check_schema(j);
  const int n = field<int>(j, "n");
  const int t = field<int>(j, "t");
  if (n < 2 || t < 0) {
    throw ParseError("event needs n >= 2 and t >= 0");
  }
  const json& arr = j.at("paths");
  if (!arr.is_array()) {
    throw ParseError("\"paths\" must be an array");
  }
  std::vector<TPath> paths;
  for (const auto& p : arr) {
    paths.push_back(path_from_json(p));
  }
  return Event(Model(n), t, std::move(paths));
}

json to_json(const InitialState& psi, std::optional<double> c_abs_sq) {
  json out = {{"schema", kSchema}};
  if (const auto* exact = std::get_if<ExactState>(&psi)) {
    out["mode"] = "exact";
    out["z"] = exact->z;
    out["q"] = exact->q;
    if (c_abs_sq) {
      out["c_abs_sq"] = *c_abs_sq;
    }
  } else {
    const auto& f = std::get<FloatState>(psi);
    std::vector<double> re;
    std::vector<double> im;
    for (auto z : f.psi) {
      re.push_back(z.real());
      im.push_back(z.imag());
    }
    out["mode"] = "float";
    out["re"] = re;
    out["im"] = im;
  }
  return out;
}

StateSpec state_from_json(const json& j) {
  check_schema(j);
  const auto mode = field<std::string>(j, "mode");
  StateSpec spec{ExactState{}, std::nullopt};
  if (mode == "exact") {
    spec.psi = ExactState{field<std::vector<long>>(j, "z"), field<std::vector<int>>(j, "q")};
    if (j.contains("c_abs_sq")) {
      spec.c_abs_sq = field<double>(j, "c_abs_sq");
    }
  } else if (mode == "float") {
    const auto re = field<std::vector<double>>(j, "re");
    const auto im = j.contains("im") ? field<std::vector<double>>(j, "im") : std::vector<double>(re.size());
    if (re.size() != im.size()) {
      throw ParseError("\"re\" and \"im\" differ in length");
    }
    FloatState f;
    for (std::size_t k = 0; k < re.size(); ++k) {
      f.psi.emplace_back(re[k], im[k]);
    }
    spec.psi = f;
  } else {
    throw ParseError("state mode must be \"exact\" or \"float\"");
  }
  return spec;
}

json to_json(const CycNum& a) {
  json coeffs = json::array();
  for (const auto& c : a.coeffs()) {
    coeffs.push_back(big(c));
  }
  return {{"order", a.order()}, {"sqrt_n_exp", a.sqrt_n_exp()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const json& j) {
  const int order = field<int>(j, "order");
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) {
    coeffs.push_back(big_from(c));
  }
  if (order < 1 || static_cast<int>(coeffs.size()) != order) {
    throw ParseError("cyclotomic number needs exactly `order` coefficients");
  }
  return CycNum(order, std::move(coeffs), field<int>(j, "sqrt_n_exp"));
}

json to_json(const PhaseCountTable& table) {
  const Model& model = table.model();
  json entries = json::array();
  for (Site i = 0; i < model.n(); ++i) {
    for (Site f = 0; f < model.n(); ++f) {
      for (int p = 0; p < model.order(); ++p) {
        if (table(i, f, p) != 0) {
          entries.push_back({{"i", i}, {"f", f}, {"p", p}, {"count", big(table(i, f, p))}});
        }
      }
    }
  }
  return {{"t", table.time()}, {"entries", entries}};
}

PhaseCountTable table_from_json(const Model& model, const json& j) {
  PhaseCountTable table(model, field<int>(j, "t"));
  for (const auto& e : j.at("entries")) {
    const int i = field<int>(e, "i");
    const int f = field<int>(e, "f");
    const int p = field<int>(e, "p");
    if (!model.valid_site(i) || !model.valid_site(f) || p < 0 || p >= model.order()) {
      throw ParseError("phase-count entry out of range");
    }
    table(i, f, p) = big_from(e.at("count"));
  }
  return table;
}

json to_json(const MeasureResult& r) {
  json out = {{"schema", kSchema},
              {"mode", r.mode()},
              {"mu_numeric", r.numeric},
              {"is_zero", r.is_zero},
              {"thresholded", r.thresholded},
              {"per_final_site", r.per_final_site}};
  if (r.exact) {
    out["mu_exact"] = to_json(*r.exact);
  }
  return out;
}

json to_json(const StymieCertificate& cert) {
  json gens = json::array();
  for (const auto& g : cert.generators) {
    gens.push_back({{"i", g.i},
                    {"f", g.f},
                    {"p", g.p},
                    {"prefix", to_json(g.prefix)},
                    {"zigzag", g.zigzag ? json(*g.zigzag) : json(nullptr)},
                    {"lo", big(g.lo)},
                    {"hi", big(g.hi)}});
  }
  json out = {{"schema", kSchema},
              {"kind", cert.kind == StymieKind::Universal ? "universal" : "initial"},
              {"base", to_json(cert.base)},
              {"base_time", cert.base_time},
              {"m", cert.m},
              {"horizon", cert.horizon},
              {"required", to_json(cert.required)},
              {"generators", gens},
              {"g_size", big(cert.g_size)},
              {"mu_exact", to_json(cert.mu_exact)},
              {"mu_is_zero", cert.mu_is_zero},
              {"f_counts", to_json(cert.f_counts)}};
  if (cert.kind == StymieKind::Initial) {
    out["big_m"] = cert.big_m;
    out["inner_time"] = cert.inner_time;
    out["i_check"] = cert.i_check;
    if (cert.state) {
      out["state"] = to_json(*cert.state);
    }
  }
  return out;
}

StymieCertificate certificate_from_json(const json& j) {
  check_schema(j);
  const auto kind = field<std::string>(j, "kind");
  if (kind != "universal" && kind != "initial") {
    throw ParseError("certificate kind must be \"universal\" or \"initial\"");
  }
  Event base = event_from_json(j.at("base"));
  const Model model = base.model();
  std::vector<Generator> gens;
  for (const auto& g : j.at("generators")) {
    std::optional<int> k;
    if (g.contains("zigzag") && !g["zigzag"].is_null()) {
      k = field<int>(g, "zigzag");
    }
    gens.push_back({field<int>(g, "i"), field<int>(g, "f"), field<int>(g, "p"),
                    path_from_json(g.at("prefix")), k, big_from(g.at("lo")), big_from(g.at("hi"))});
  }
  StymieCertificate cert{kind == "universal" ? StymieKind::Universal : StymieKind::Initial,
                         std::move(base),
                         field<int>(j, "base_time"),
                         field<int>(j, "m"),
                         field<int>(j, "horizon"),
                         0,
                         0,
                         std::nullopt,
                         -1,
                         table_from_json(model, j.at("required")),
                         std::move(gens),
                         big_from(j.at("g_size")),
                         cycnum_from_json(j.at("mu_exact")),
                         field<bool>(j, "mu_is_zero"),
                         table_from_json(model, j.at("f_counts"))};
  if (cert.kind == StymieKind::Initial) {
    cert.big_m = field<int>(j, "big_m");
    cert.inner_time = field<int>(j, "inner_time");
    cert.i_check = field<int>(j, "i_check");
    const StateSpec spec = state_from_json(j.at("state"));
    if (!std::holds_alternative<ExactState>(spec.psi)) {
      throw ParseError("initial-variant certificates carry an exact state");
    }
    cert.state = std::get<ExactState>(spec.psi);
  }
  return cert;
}

json spectrum_json(const Model& model) {
  json pairs = json::array();
  for (const auto& e : eigensystem(model)) {
    json vec = json::array();
    for (Eigen::Index k = 0; k < e.vector.size(); ++k) {
      vec.push_back(complex_json(e.vector(k)));
    }
    pairs.push_back({{"j", e.j}, {"value", complex_json(e.value)}, {"residual", e.residual}, {"vector", vec}});
  }
  const PeriodicityFacts facts = periodicity_class(model);
  return {{"schema", kSchema},
          {"n", model.n()},
          {"eigenpairs", pairs},
          {"periodicity",
           {{"mod4", facts.mod4},
            {"short_period", facts.short_period},
            {"short_value", facts.short_value},
            {"short_verified", facts.short_verified},
            {"full_period", 4 * model.n()},
            {"full_verified", facts.full_verified}}}};
}

json to_json(const TruncatedSystem& sys, HistorySet a) {
  json paths = json::array();
  for (std::size_t k = 0; k < sys.size(); ++k) {
    if (a >> k & 1) {
      paths.push_back(to_json(sys.history(k)));
    }
  }
  return {{"n", sys.model().n()}, {"t", sys.t_max()}, {"paths", paths}};
}

json supports_json(const TruncatedSystem& sys, const std::vector<Coevent>& supports) {
  json list = json::array();
  for (const auto& c : supports) {
    list.push_back(to_json(sys, c.support)["paths"]);
  }
  return {{"schema", kSchema},
          {"n", sys.model().n()},
          {"t_max", sys.t_max()},
          {"measure", sys.is_classical() ? "classical" : "quantum"},
          {"maximal_null_events", sys.maximal_null_events().size()},
          {"supports", list}};
}

json stymied_json(const TruncatedSystem& sys, HistorySet e, const StymiedResult& r) {
  json out = {{"schema", kSchema},
              {"event", to_json(sys, e)},
              {"mu", sys.measure(e)},
              {"stymied", r.stymied},
              {"self_null", r.self_null}};
  if (r.witness) {
    out["witness"] = to_json(sys, *r.witness);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace hopper::io
