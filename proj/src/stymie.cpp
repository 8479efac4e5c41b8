#include "hopper/stymie.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "hopper/errors.hpp"

namespace hopper {
namespace {

BigInt big_pow(long base, long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

int wrap(long long p, int order) {
  const long long r = p % order;
  return static_cast<int>(r < 0 ? r + order : r);
}

int tail_steps(const Model& model) { return 2 * (model.n() - 1); }

/// Walks ending at a fixed site, counted by number of steps, start site and phase.
class WalkTable {
 public:
  WalkTable(const Model& model, Site target, int max_steps)
      : model_(model), target_(target), max_steps_(max_steps) {
    const int n = model.n();
    const int order = model.order();
    table_.assign(static_cast<std::size_t>((max_steps + 1) * n * order), BigInt(0));
    at(0, target, 0) = 1;
    for (int s = 1; s <= max_steps; ++s) {
      for (Site j = 0; j < n; ++j) {
        for (Site k = 0; k < n; ++k) {
          const int step = transfer_phase(model, j, k);
          for (int phi = 0; phi < order; ++phi) {
            const BigInt& c = at(s - 1, k, phi);
            if (c != 0) {
              at(s, j, (phi + step) % order) += c;
            }
          }
        }
      }
    }
  }

  const BigInt& count(int steps, Site from, int phase) const {
    return table_[index(steps, from, phase)];
  }

  /// The walk of the given rank among walks from `from` to the target with
  /// `steps` steps and phase `phase`, in lexicographic order of sites.
  TPath unrank(Site from, int steps, int phase, BigInt rank) const {
    std::vector<Site> sites{from};
    sites.reserve(static_cast<std::size_t>(steps) + 1);
    Site cur = from;
    for (int s = steps; s > 0; --s) {
      bool found = false;
      for (Site k = 0; k < model_.n(); ++k) {
        const int rest = wrap(phase - transfer_phase(model_, cur, k), model_.order());
        const BigInt& c = count(s - 1, k, rest);
        if (rank < c) {
          sites.push_back(k);
          cur = k;
          phase = rest;
          found = true;
          break;
        }
        rank -= c;
      }
      if (!found) {
        throw PreconditionError("segment rank out of range");
      }
    }
    return TPath(std::move(sites));
  }

  Site target() const { return target_; }
  int max_steps() const { return max_steps_; }

 private:
  std::size_t index(int steps, Site from, int phase) const {
    return (static_cast<std::size_t>(steps) * static_cast<std::size_t>(model_.n()) +
            static_cast<std::size_t>(from)) *
               static_cast<std::size_t>(model_.order()) +
           static_cast<std::size_t>(phase);
  }
  BigInt& at(int steps, Site from, int phase) { return table_[index(steps, from, phase)]; }

  Model model_;
  Site target_;
  int max_steps_;
  std::vector<BigInt> table_;
};

struct SegmentSpec {
  int steps;
  int phase;
};

// Length and phase of the ranked segment of a generator.
SegmentSpec segment_spec(const Model& model, int base_time, int horizon, const Generator& g) {
  const int prefix_phase = path_phase(model, g.prefix);
  if (g.zigzag) {
    return {horizon - base_time - tail_steps(model),
            wrap(static_cast<long long>(g.p) - prefix_phase - 2LL * *g.zigzag, model.order())};
  }
  return {horizon - base_time, wrap(static_cast<long long>(g.p) - prefix_phase, model.order())};
}

TPath generator_path(const Model& model, const WalkTable& walks, const SegmentSpec& spec,
                     const Generator& g, const BigInt& rank) {
  TPath path = g.prefix.joined(walks.unrank(g.prefix.back(), spec.steps, spec.phase, rank));
  if (g.zigzag) {
    path = path.joined(zigzag_tail(model, g.f, *g.zigzag));
  }
  return path;
}

// Prefixes of the complement at the base time, grouped by start site.
std::vector<std::vector<TPath>> complement_prefixes(const Event& canonical_e) {
  const Event bar = complement(canonical_e);
  std::vector<std::vector<TPath>> out(static_cast<std::size_t>(canonical_e.model().n()));
  for (const auto& p : bar.paths()) {
    out[static_cast<std::size_t>(p.front())].push_back(p);
  }
  return out;
}

// Generators realizing `count` paths of class (i, f, p) at the horizon.
std::vector<Generator> fill_cell(const Model& model, const std::vector<TPath>& prefixes,
                                 const WalkTable& walks, int base_time, int horizon, Site i, Site f,
                                 int p, BigInt count) {
  const int mid_steps = horizon - base_time - tail_steps(model);
  const BigInt zigzag_capacity =
      BigInt(static_cast<unsigned long>(prefixes.size())) * big_pow(model.n(), mid_steps - 1);
  const bool use_zigzag = mid_steps >= 1 && zigzag_capacity >= count;

  std::vector<Generator> out;
  for (const auto& prefix : prefixes) {
    if (count == 0) {
      break;
    }
    std::vector<std::optional<int>> ks;
    if (use_zigzag) {
      for (int k = 0; k < model.n(); ++k) {
        ks.emplace_back(k);
      }
    } else {
      ks.emplace_back(std::nullopt);
    }
    for (const auto& k : ks) {
      Generator g{i, f, p, prefix, k, BigInt(0), BigInt(0)};
      const SegmentSpec spec = segment_spec(model, base_time, horizon, g);
      const BigInt& avail = walks.count(spec.steps, prefix.back(), spec.phase);
      const BigInt take = avail < count ? avail : count;
      if (take == 0) {
        continue;
      }
      g.hi = take;
      count -= take;
      out.push_back(std::move(g));
      if (count == 0) {
        break;
      }
    }
  }
  if (count != 0) {
    throw LimitError("complement has too few paths in class (" + std::to_string(i) + "," +
                     std::to_string(f) + "," + std::to_string(p) + ")");
  }
  return out;
}

PhaseCountTable generator_tally(const Model& model, int horizon, const std::vector<Generator>& gens) {
  PhaseCountTable table(model, horizon);
  for (const auto& g : gens) {
    table(g.i, g.f, g.p) += g.hi - g.lo;
  }
  return table;
}

bool covers(const PhaseCountTable& available, const PhaseCountTable& required) {
  const Model& model = required.model();
  for (Site i = 0; i < model.n(); ++i) {
    for (Site f = 0; f < model.n(); ++f) {
      for (int p = 0; p < model.order(); ++p) {
        if (available(i, f, p) < required(i, f, p)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool all_zero(const std::vector<CycNum>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](const CycNum& x) { return is_zero(x); });
}

CycNum sum_abs_sq(const std::vector<CycNum>& xs, int order, int sqrt_n_exp) {
  CycNum sum(order, sqrt_n_exp);
  for (const auto& x : xs) {
    sum += abs_sq(x);
  }
  return sum;
}

// G's generators for every nonzero entry of `required`.
std::vector<Generator> assemble(const Model& model, const std::vector<std::vector<TPath>>& prefixes,
                                int base_time, int horizon, const PhaseCountTable& required) {
  std::vector<Generator> gens;
  for (Site f = 0; f < model.n(); ++f) {
    std::optional<WalkTable> walks;
    for (Site i = 0; i < model.n(); ++i) {
      for (int p = 0; p < model.order(); ++p) {
        const BigInt& r = required(i, f, p);
        if (r == 0) {
          continue;
        }
        if (!walks) {
          walks.emplace(model, f, horizon - base_time);
        }
        auto cell = fill_cell(model, prefixes[static_cast<std::size_t>(i)], *walks, base_time,
                              horizon, i, f, p, r);
        gens.insert(gens.end(), std::make_move_iterator(cell.begin()),
                    std::make_move_iterator(cell.end()));
      }
    }
  }
  return gens;
}

BigInt total_size(const std::vector<Generator>& gens) {
  BigInt sum = 0;
  for (const auto& g : gens) {
    sum += g.hi - g.lo;
  }
  return sum;
}

// Universal targets: n^((t - t_E)/2) (max_q s(i,f,q) - s(i,f,p)) over admissible p.
PhaseCountTable universal_required(const PhaseCountTable& base_counts, int horizon) {
  const Model& model = base_counts.model();
  const BigInt scale = big_pow(model.n(), (horizon - base_counts.time()) / 2);
  PhaseCountTable required(model, horizon);
  for (Site i = 0; i < model.n(); ++i) {
    for (Site f = 0; f < model.n(); ++f) {
      const auto phases = admissible_phases(model, i, f);
      BigInt top = 0;
      for (int q : phases) {
        top = std::max(top, base_counts(i, f, q));
      }
      for (int p : phases) {
        required(i, f, p) = scale * (top - base_counts(i, f, p));
      }
    }
  }
  return required;
}

// Initial-variant targets at T for row i_check; nullopt when z_check does not
// divide n^(T/2) z_f for some f.
std::optional<PhaseCountTable> initial_required(const PhaseCountTable& inner_counts, int horizon,
                                                const ExactState& shifted, Site i_check) {
  const Model& model = inner_counts.model();
  const BigInt outer = big_pow(model.n(), (horizon - inner_counts.time()) / 2);
  const BigInt full = big_pow(model.n(), horizon / 2);
  const BigInt z_check = shifted.z[static_cast<std::size_t>(i_check)];
  PhaseCountTable required(model, horizon);
  for (Site f = 0; f < model.n(); ++f) {
    BigInt top = 0;
    for (int q = 0; q < model.order(); ++q) {
      top = std::max(top, inner_counts(i_check, f, q));
    }
    BigInt ratio = 0;
    BigInt abs_ratio = 0;
    if (f != i_check) {
      const BigInt numer = full * shifted.z[static_cast<std::size_t>(f)];
      if (numer % z_check != 0) {
        return std::nullopt;
      }
      ratio = numer / z_check;
      abs_ratio = abs(numer) / abs(z_check);
    }
    for (int p = 0; p < model.order(); ++p) {
      BigInt r = outer * (top - inner_counts(i_check, f, p));
      if (f != i_check) {
        r += (p != shifted.q[static_cast<std::size_t>(f)] ? ratio : BigInt(0)) + abs_ratio;
      }
      required(i_check, f, p) = r;
    }
  }
  return required;
}

ExactState shift_phases(const Model& model, const ExactState& psi, Site i_check) {
  ExactState out = psi;
  const int q0 = psi.q[static_cast<std::size_t>(i_check)];
  for (auto& q : out.q) {
    q = wrap(static_cast<long long>(q) - q0, model.order());
  }
  return out;
}

// Prime factors of z_check / gcd(z_check, z_f) must all divide n for some power
// of n to make the division exact.
bool divisibility_possible(const Model& model, const ExactState& psi, Site i_check) {
  const BigInt n = model.n();
  const BigInt z_check = abs(BigInt(psi.z[static_cast<std::size_t>(i_check)]));
  for (Site f = 0; f < model.n(); ++f) {
    if (f == i_check) {
      continue;
    }
    BigInt g;
    const BigInt zf = psi.z[static_cast<std::size_t>(f)];
    mpz_gcd(g.get_mpz_t(), z_check.get_mpz_t(), zf.get_mpz_t());
    BigInt rest = z_check / g;
    while (rest != 1) {
      BigInt h;
      mpz_gcd(h.get_mpz_t(), rest.get_mpz_t(), n.get_mpz_t());
      if (h == 1) {
        return false;
      }
      rest /= h;
    }
  }
  return true;
}

std::string encode(const TPath& path) {
  std::string key;
  key.reserve(path.size() * 2);
  for (Site s : path.sites()) {
    key.push_back(static_cast<char>(s & 0xff));
    key.push_back(static_cast<char>((s >> 8) & 0xff));
  }
  return key;
}

}  // namespace

TPath zigzag_tail(const Model& model, Site f, int k) {
  if (!model.valid_site(f)) {
    throw PreconditionError("zig-zag site out of range");
  }
  if (k < 0 || k > model.n() - 1) {
    throw PreconditionError("zig-zag count must lie in [0, n-1], got " + std::to_string(k));
  }
  std::vector<Site> sites{f};
  for (int z = 0; z < k; ++z) {
    sites.push_back((f + 1) % model.n());
    sites.push_back(f);
  }
  while (static_cast<int>(sites.size()) < tail_steps(model) + 1) {
    sites.push_back(f);
  }
  return TPath(std::move(sites));
}

PhaseCountTable count_lower_bound(const Event& e, int t) {
  const DefiningTime d = defining_time(e);
  const Model& model = e.model();
  const int exponent = t - d.time - 2 * model.n() + 1;
  if (exponent < 0) {
    throw PreconditionError("lower bound needs t >= t_E + 2n - 1");
  }
  const auto c = initial_path_counts(d.canonical);
  const BigInt scale = big_pow(model.n(), exponent);
  PhaseCountTable bound(model, t);
  for (Site i = 0; i < model.n(); ++i) {
    for (Site f = 0; f < model.n(); ++f) {
      for (int p : admissible_phases(model, i, f)) {
        bound(i, f, p) = BigInt(static_cast<unsigned long>(c[static_cast<std::size_t>(i)])) * scale;
      }
    }
  }
  return bound;
}

StymieCertificate build_null_superset(const Event& e, const StymieOptions& options) {
  const DefiningTime d = defining_time(e);
  const Model& model = e.model();
  if (d.canonical.is_empty()) {
    throw PreconditionError("the empty event has no non-trivial null superset to build");
  }
  if (const auto sites = initial_sites(d.canonical); !sites.empty()) {
    std::string list;
    for (Site s : sites) {
      list += (list.empty() ? "" : ",") + std::to_string(s);
    }
    throw PreconditionError("event contains Cyl(i) for i in {" + list + "}");
  }
  const int n = model.n();
  const PhaseCountTable base_counts = tally_paths(model, d.time, d.canonical.paths());
  const auto prefixes = complement_prefixes(d.canonical);
  PhaseCountTable bar_counts = tally_paths(model, d.time, complement(d.canonical).paths());

  for (int m = 1; m <= options.m_max; ++m) {
    const int horizon = d.time + 4 * n * m;
    bar_counts = advance(bar_counts, horizon - bar_counts.time());
    PhaseCountTable required = universal_required(base_counts, horizon);
    if (!covers(bar_counts, required)) {
      continue;
    }
    auto gens = assemble(model, prefixes, d.time, horizon, required);
    PhaseCountTable f_counts = phase_counts(d.canonical, horizon);
    f_counts += generator_tally(model, horizon, gens);
    const auto cells = cell_sums(f_counts);
    BigInt g_size = total_size(gens);
    return StymieCertificate{StymieKind::Universal,
                             d.canonical,
                             d.time,
                             m,
                             horizon,
                             0,
                             0,
                             std::nullopt,
                             -1,
                             std::move(required),
                             std::move(gens),
                             std::move(g_size),
                             sum_abs_sq(cells, model.order(), 2 * horizon),
                             all_zero(cells),
                             std::move(f_counts)};
  }
  throw LimitError("no m <= " + std::to_string(options.m_max) +
                   " gives enough complement paths; raise m_max");
}

StymieCertificate build_null_superset_initial(const Event& e, const ExactState& psi, Site i_check,
                                              const StymieOptions& options) {
  const Model& model = e.model();
  const int n = model.n();
  if (model.is_even()) {
    throw PreconditionError("initial-position stymieing is only supported for odd n");
  }
  validate(model, psi);
  if (!model.valid_site(i_check)) {
    throw PreconditionError("i_check out of range");
  }
  if (psi.z[static_cast<std::size_t>(i_check)] == 0) {
    throw PreconditionError("z at i_check is zero: histories from it carry no amplitude");
  }
  const DefiningTime d = defining_time(e);
  std::vector<Site> expected;
  for (Site i = 0; i < n; ++i) {
    if (i != i_check) {
      expected.push_back(i);
    }
  }
  if (initial_sites(d.canonical) != expected) {
    throw PreconditionError("event must contain Cyl(i) exactly for every i != i_check");
  }
  if (!divisibility_possible(model, psi, i_check)) {
    throw PreconditionError("z at i_check never divides n^(T/2) z_f for all f");
  }
  const ExactState shifted = shift_phases(model, psi, i_check);
  const auto prefixes = complement_prefixes(d.canonical);
  const PhaseCountTable bar_base = tally_paths(model, d.time, complement(d.canonical).paths());

  const int m_first = std::max(1, (d.time + 4 * n - 1) / (4 * n));
  for (int m = m_first; m <= options.m_max; ++m) {
    const int inner = 4 * n * m;
    const PhaseCountTable inner_counts = phase_counts(d.canonical, inner);
    for (int big_m = m + 1; big_m <= options.big_m_max; ++big_m) {
      const int horizon = 4 * n * big_m;
      auto required = initial_required(inner_counts, horizon, shifted, i_check);
      if (!required) {
        continue;
      }
      if (!covers(advance(bar_base, horizon - d.time), *required)) {
        continue;
      }
      auto gens = assemble(model, prefixes, d.time, horizon, *required);
      PhaseCountTable f_counts = phase_counts(d.canonical, horizon);
      f_counts += generator_tally(model, horizon, gens);
      const auto sums = amplitude_sums(f_counts, psi);
      BigInt g_size = total_size(gens);
      return StymieCertificate{StymieKind::Initial,
                               d.canonical,
                               d.time,
                               m,
                               horizon,
                               big_m,
                               inner,
                               psi,
                               i_check,
                               std::move(*required),
                               std::move(gens),
                               std::move(g_size),
                               sum_abs_sq(sums, model.order(), 2 * horizon),
                               all_zero(sums),
                               std::move(f_counts)};
    }
  }
  throw LimitError("no (m, M) within m_max=" + std::to_string(options.m_max) +
                   ", M_max=" + std::to_string(options.big_m_max) + " satisfies the construction");
}

void for_each_g_path(const StymieCertificate& cert,
                     const std::function<void(const TPath&, const Generator&)>& visit) {
  const Model& model = cert.model();
  std::map<Site, WalkTable> tables;
  for (const auto& g : cert.generators) {
    auto it = tables.find(g.f);
    if (it == tables.end()) {
      it = tables.emplace(g.f, WalkTable(model, g.f, cert.horizon - cert.base_time)).first;
    }
    const SegmentSpec spec = segment_spec(model, cert.base_time, cert.horizon, g);
    for (BigInt r = g.lo; r < g.hi; ++r) {
      visit(generator_path(model, it->second, spec, g, r), g);
    }
  }
}

Event materialize_g(const StymieCertificate& cert, std::size_t cap) {
  if (cert.g_size > BigInt(static_cast<unsigned long>(cap))) {
    throw LimitError("G holds more paths than the materialization cap");
  }
  std::vector<TPath> paths;
  for_each_g_path(cert, [&](const TPath& p, const Generator&) { paths.push_back(p); });
  return Event(cert.model(), cert.horizon, std::move(paths));
}

VerifyReport verify_report(const StymieCertificate& cert, const StymieOptions& options) {
  VerifyReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.reason = std::move(why);
    return report;
  };
  try {
    const Model& model = cert.model();
    const int n = model.n();
    const DefiningTime d = defining_time(cert.base);
    if (d.time != cert.base_time || d.canonical.paths() != cert.base.paths()) {
      return fail("base event is not in canonical form at the recorded defining time");
    }
    if (cert.m < 1) {
      return fail("m must be positive");
    }

    // Targets, recomputed from scratch.
    PhaseCountTable expected(model, cert.horizon);
    const ExactState* psi = nullptr;
    if (cert.kind == StymieKind::Universal) {
      if (d.canonical.is_empty() || !initial_sites(d.canonical).empty()) {
        return fail("base event violates the universal preconditions");
      }
      if (cert.horizon != d.time + 4 * n * cert.m) {
        return fail("horizon is not t_E + 4nm");
      }
      PhaseCountTable brute(model, d.time);
      for (const auto& path : d.canonical.paths()) {
        brute(path.front(), path.back(), path_phase(model, path)) += 1;
      }
      expected = universal_required(brute, cert.horizon);
    } else {
      if (!cert.state || model.is_even() || !model.valid_site(cert.i_check)) {
        return fail("initial-variant certificate needs odd n, a state and i_check");
      }
      psi = &*cert.state;
      validate(model, *psi);
      if (psi->z[static_cast<std::size_t>(cert.i_check)] == 0) {
        return fail("z at i_check is zero");
      }
      const auto sites = initial_sites(d.canonical);
      if (static_cast<int>(sites.size()) != n - 1 ||
          std::find(sites.begin(), sites.end(), cert.i_check) != sites.end()) {
        return fail("base event must contain Cyl(i) exactly for i != i_check");
      }
      if (cert.inner_time != 4 * n * cert.m || cert.inner_time < d.time ||
          cert.horizon != 4 * n * cert.big_m || cert.big_m <= cert.m) {
        return fail("times are not t = 4nm >= t_E and T = 4nM > t");
      }
      auto req = initial_required(phase_counts(d.canonical, cert.inner_time), cert.horizon,
                                  shift_phases(model, *psi, cert.i_check), cert.i_check);
      if (!req) {
        return fail("divisibility condition fails at this T");
      }
      expected = std::move(*req);
    }
    if (!(expected == cert.required)) {
      return fail("required counts do not match the base event");
    }

    // G: explicit paths when small enough, count arithmetic otherwise.
    PhaseCountTable g_counts(model, cert.horizon);
    for (const auto& g : cert.generators) {
      if (g.prefix.time() != d.time || g.prefix.front() != g.i || d.canonical.contains(g.prefix) ||
          !is_admissible_phase(model, g.i, g.f, g.p) || g.lo < 0 || g.hi < g.lo ||
          (g.zigzag && (*g.zigzag < 0 || *g.zigzag >= n))) {
        return fail("malformed generator");
      }
      if (cert.kind == StymieKind::Initial && g.i != cert.i_check) {
        return fail("generator starts outside i_check");
      }
    }
    const bool small = cert.g_size <= BigInt(static_cast<unsigned long>(options.materialize_cap));
    report.materialized = small;
    if (small) {
      std::vector<std::string> keys;
      bool bad = false;
      BigInt seen = 0;
      for_each_g_path(cert, [&](const TPath& path, const Generator&) {
        ++seen;
        if (path.time() != cert.horizon || d.canonical.contains(path)) {
          bad = true;
          return;
        }
        g_counts(path.front(), path.back(), path_phase(model, path)) += 1;
        keys.push_back(encode(path));
      });
      if (bad) {
        return fail("a path of G has the wrong length or lies in E");
      }
      if (seen != cert.g_size) {
        return fail("|G| does not match the generators");
      }
      std::sort(keys.begin(), keys.end());
      if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
        return fail("G contains a repeated path");
      }
    } else {
      // Ranges must fit inside the available segments and must not overlap.
      std::map<std::tuple<TPath, std::optional<int>, Site, int>, std::vector<std::pair<BigInt, BigInt>>>
          ranges;
      std::map<std::tuple<Site, Site, int>, std::set<bool>> modes;
      for (const auto& g : cert.generators) {
        const SegmentSpec spec = segment_spec(model, cert.base_time, cert.horizon, g);
        if (spec.steps < 1) {
          return fail("segment too short");
        }
        const PhaseCountTable walks =
            phase_counts(cylinder(model, TPath{g.prefix.back()}), spec.steps);
        if (g.hi > walks(g.prefix.back(), g.f, spec.phase)) {
          return fail("generator range exceeds the available segments");
        }
        ranges[{g.prefix, g.zigzag, g.f, g.p}].emplace_back(g.lo, g.hi);
        modes[{g.i, g.f, g.p}].insert(g.zigzag.has_value());
        g_counts(g.i, g.f, g.p) += g.hi - g.lo;
      }
      for (auto& [key, rs] : ranges) {
        std::sort(rs.begin(), rs.end());
        for (std::size_t k = 1; k < rs.size(); ++k) {
          if (rs[k].first < rs[k - 1].second) {
            return fail("overlapping generator ranges");
          }
        }
      }
      for (const auto& [key, m] : modes) {
        if (m.size() > 1) {
          return fail("a cell mixes zig-zag and ranked-suffix generators");
        }
      }
      if (g_counts.total() != cert.g_size) {
        return fail("|G| does not match the generators");
      }
    }
    if (!(g_counts == cert.required)) {
      return fail("phase counts of G differ from the required counts");
    }

    PhaseCountTable f_counts = phase_counts(d.canonical, cert.horizon);
    f_counts += g_counts;
    if (!(f_counts == cert.f_counts)) {
      return fail("recorded phase counts of F are wrong");
    }
    bool null_f = false;
    if (cert.kind == StymieKind::Universal) {
      null_f = all_zero(cell_sums(f_counts));
    } else {
      null_f = all_zero(amplitude_sums(f_counts, *psi));
    }
    if (!null_f) {
      return fail("F is not null");
    }
    if (!cert.mu_is_zero || !is_zero(cert.mu_exact)) {
      return fail("recorded measure of F is not zero");
    }
    report.ok = true;
    return report;
  } catch (const std::exception& ex) {
    return fail(std::string("malformed certificate: ") + ex.what());
  }
}

bool verify_certificate(const StymieCertificate& cert, const StymieOptions& options) {
  return verify_report(cert, options).ok;
}

}  // namespace hopper
