// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hopper/coevents.hpp"
#include "hopper/errors.hpp"
#include "hopper/fixtures.hpp"
#include "hopper/measure.hpp"
#include "hopper/spectral.hpp"
#include "hopper/stymie.hpp"
#include "oracle.hpp"

using namespace hopper;

namespace {

// Tolerances and budgets.
constexpr double kProbTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr double kGaussTol = 1e-10;
constexpr double kSchaarTol = 1e-9;
constexpr double kFloatNullTol = 1e-12;
constexpr double kFixtureSeconds = 1.0;
constexpr double kTimeIndependenceSeconds = 30.0;
constexpr double kPeriodicitySeconds = 60.0;
constexpr double kConstructSeconds = 600.0;
constexpr std::size_t kMaterializeCap = 1'000'000;
constexpr std::uint64_t kSeed = 0x5eed2024;

struct Check {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      note << what;
    }
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ExactState random_exact(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> z(-3, 3);
  std::uniform_int_distribution<int> q(0, phase_order(n) - 1);
  ExactState s;
  do {
    s.z.clear();
    s.q.clear();
    for (int i = 0; i < n; ++i) {
      s.z.push_back(z(rng));
      s.q.push_back(q(rng));
    }
  } while (std::all_of(s.z.begin(), s.z.end(), [](long v) { return v == 0; }));
  return s;
}

bool cell_is(const PhaseCountTable& t, int i, int f, int p, long v) { return t(i, f, p) == v; }

// 1. Null fixtures, exact.
void criterion_1(Check& c) {
  const auto timed = [&](const std::string& name, const std::function<bool()>& body) {
    const auto t0 = Clock::now();
    const bool ok = body();
    const double s = seconds_since(t0);
    c.require(ok, name + " wrong; ");
    c.require(s < kFixtureSeconds, name + " too slow; ");
  };
  timed("A", [] {
    const auto s = phase_counts(fixtures::event_a());
    return s.time() == 2 && cell_is(s, 0, 0, 0, 1) && cell_is(s, 0, 0, 2, 1) && s.total() == 2 &&
           measure(fixtures::event_a(), ExactState{{2, -1}, {1, 3}}).is_zero && is_null_universal(fixtures::event_a());
  });
  timed("B", [] {
    const auto s = phase_counts(fixtures::event_b());
    bool ok = s.time() == 4 && s.total() == 5;
    for (int p = 0; p < 5; ++p) {
      ok = ok && cell_is(s, 0, 3, p, 1);
    }
    return ok && measure(fixtures::event_b(), ExactState{{1, 2, 3, 4, 5}, {0, 1, 2, 3, 4}}).is_zero &&
           is_null_universal(fixtures::event_b());
  });
  timed("C", [] {
    const auto r = measure(fixtures::event_c(), fixtures::state_c());
    return r.is_zero && !r.thresholded && r.exact && is_zero(*r.exact);
  });
  timed("E", [] {
    const auto s = phase_counts(fixtures::event_e());
    const auto r = measure(fixtures::event_e(), fixtures::state_e());
    return s.time() == 3 && cell_is(s, 0, 0, 0, 1) && cell_is(s, 0, 0, 2, 1) && cell_is(s, 0, 1, 1, 1) &&
           cell_is(s, 0, 1, 3, 1) && s.total() == 4 && r.is_zero && !r.thresholded;
  });
}

// 2. mu(Omega) = 1 and mu(Cyl(i)) = |psi_i|^2 in float mode.
void criterion_2(Check& c) {
  std::mt19937_64 rng(kSeed + 2);
  for (int n = 2; n <= 6; ++n) {
    const Model m(n);
    for (int k = 0; k < 20; ++k) {
      const FloatState psi{oracle::random_state(n, rng)};
      c.require(std::abs(measure(Event::full(m, 0), psi).numeric - 1.0) < kProbTol, "mu(Omega) != 1; ");
      for (int i = 0; i < n; ++i) {
        const double mu = measure(cylinder(m, TPath{i}), psi).numeric;
        c.require(std::abs(mu - std::norm(psi.psi[static_cast<std::size_t>(i)])) < kProbTol, "mu(Cyl(i)); ");
      }
    }
  }
}

// 3. D(E, F) exactly independent of t.
void criterion_3(Check& c) {
  std::mt19937_64 rng(kSeed + 3);
  const auto t0 = Clock::now();
  for (int n = 2; n <= 5; ++n) {
    std::uniform_int_distribution<int> tdist(0, 4);
    for (int k = 0; k < 100; ++k) {
      const Event e = oracle::random_event(n, tdist(rng), rng);
      const Event f = oracle::random_event(n, tdist(rng), rng);
      const ExactState psi = random_exact(n, rng);
      const int t = std::max(e.time(), f.time());
      const CycNum base = std::get<CycNum>(decoherence(e, f, psi, t));
      for (int d = 1; d <= 4; ++d) {
        c.require(std::get<CycNum>(decoherence(e, f, psi, t + d)) == base, "D changed with t; ");
      }
    }
  }
  const double s = seconds_since(t0);
  c.note << "time " << s << "s";
  c.require(s < kTimeIndependenceSeconds, "; too slow");
}

// 4. Parity of Omega's phase counts for even n.
void criterion_4(Check& c) {
  for (int n : {2, 4, 6}) {
    const Event omega = Event::full(Model(n), 0);
    for (int t = 0; t <= 8; ++t) {
      const auto s = phase_counts(omega, t);
      for (int i = 0; i < n; ++i) {
        for (int f = 0; f < n; ++f) {
          for (int p = 0; p < 2 * n; ++p) {
            if ((p + i + f) % 2 == 1) {
              c.require(s(i, f, p) == 0, "odd cell nonzero; ");
            }
          }
        }
      }
    }
  }
}

// 5. Lower bound on phase counts.
void criterion_5(Check& c) {
  std::mt19937_64 rng(kSeed + 5);
  for (int n : {2, 3}) {
    std::uniform_int_distribution<int> tdist(0, 3);
    for (int k = 0; k < 100; ++k) {
      const Event e = oracle::random_event(n, tdist(rng), rng);
      const int te = defining_time(e).time;
      const auto counts = initial_path_counts(e);
      for (int t = te + 2 * n - 1; t <= te + 2 * n + 4; ++t) {
        const auto exact = phase_counts(e, t);
        const BigInt scale = [&] {
          BigInt v = 1;
          for (int x = 0; x < t - te - 2 * n + 1; ++x) {
            v *= n;
          }
          return v;
        }();
        for (int i = 0; i < n; ++i) {
          const BigInt bound = BigInt(static_cast<unsigned long>(counts[static_cast<std::size_t>(i)])) * scale;
          for (int f = 0; f < n; ++f) {
            for (int p : admissible_phases(Model(n), i, f)) {
              c.require(exact(i, f, p) >= bound, "count below bound; ");
            }
          }
        }
      }
    }
  }
}

// 6. Periodicity, exact.
void criterion_6(Check& c) {
  const auto t0 = Clock::now();
  for (int n = 2; n <= 12; ++n) {
    const auto facts = periodicity_class(Model(n));
    const std::string want = n % 2 == 0 ? (n % 4 == 0 ? "1" : "-1") : (n % 4 == 1 ? "1" : "-i");
    c.require(facts.short_value == want, "wrong period value; ");
    c.require(facts.short_period == (n % 2 == 0 ? 2 * n : n), "wrong period; ");
    c.require(facts.short_verified && facts.full_verified, "period not verified at n=" + std::to_string(n) + "; ");
  }
  const double s = seconds_since(t0);
  c.note << "time " << s << "s";
  c.require(s < kPeriodicitySeconds, "; too slow");
}

// 7. Eigensystem, Gauss sums, Landsberg-Schaar.
void criterion_7(Check& c) {
  double worst = 0;
  for (int n = 2; n <= 24; ++n) {
    for (const auto& p : eigensystem(Model(n))) {
      worst = std::max(worst, p.residual);
      const auto g = n % 2 == 0 ? gauss_sum({1, 2}, {p.j}, n) : gauss_sum({1}, {p.j}, n);
      c.require(std::abs(p.value * std::sqrt(static_cast<double>(n)) - g) < kGaussTol, "Gauss sum mismatch; ");
    }
  }
  c.require(worst < kResidualTol, "residual too large; ");
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_int_distribution<long long> pos(1, 60);
  std::uniform_int_distribution<long long> any(-60, 60);
  double worst_ls = 0;
  for (int tested = 0; tested < 50;) {
    const long long a = pos(rng);
    const long long m = pos(rng);
    const long long b = any(rng);
    if ((a * m + b) % 2 != 0) {
      continue;
    }
    ++tested;
    const auto lhs = gauss_sum({a, 2}, {b, 2}, m);
    const auto rhs = std::sqrt(static_cast<double>(m) / static_cast<double>(a)) * unit_phase(1.0 / 8.0) *
                     unit_phase(-static_cast<double>(b * b) / static_cast<double>(8 * a * m)) *
                     std::conj(gauss_sum({m, 2}, {b, 2}, a));
    worst_ls = std::max(worst_ls, std::abs(lhs - rhs));
  }
  c.require(worst_ls < kSchaarTol, "Landsberg-Schaar mismatch; ");
  c.note << "max residual " << worst << ", max identity error " << worst_ls;
}

// 8. Null supersets for random events.
void criterion_8(Check& c) {
  std::mt19937_64 rng(kSeed + 8);
  const auto t0 = Clock::now();
  int total = 0;
  int m_one = 0;
  int enumerated = 0;
  for (int n : {2, 3}) {
    const int order = phase_order(n);
    for (int k = 0; k < 100; ++k) {
      const Event e = oracle::random_proper_event(n, 3, rng);
      ++total;
      StymieCertificate cert = [&] {
        try {
          return build_null_superset(e);
        } catch (const std::exception& ex) {
          c.require(false, std::string("construction failed: ") + ex.what() + "; ");
          throw;
        }
      }();
      m_one += cert.m == 1;
      // F contains E: the certificate's base is E itself.
      c.require(cert.base == e, "base differs from E; ");
      StymieOptions options;
      options.materialize_cap = kMaterializeCap;
      const auto report = verify_report(cert, options);
      c.require(report.ok, "verify failed: " + report.reason + "; ");
      c.require(cert.mu_is_zero && is_zero(cert.mu_exact), "universal criterion; ");

      // Phase counts of G by enumeration when small enough, else the library tally.
      std::map<oracle::Key, long> g_counts;
      if (cert.g_size <= kMaterializeCap) {
        ++enumerated;
        std::set<oracle::Sites> seen;
        bool fine = true;
        for_each_g_path(cert, [&](const TPath& p, const Generator&) {
          const oracle::Sites s(p.sites().begin(), p.sites().end());
          fine = fine && static_cast<int>(s.size()) == cert.horizon + 1 && !oracle::member(e, s) &&
                 seen.insert(s).second;
          ++g_counts[{s.front(), s.back(), oracle::phase_of(n, s)}];
        });
        c.require(fine, "G path outside the complement or repeated; ");
        for (int i = 0; i < n; ++i) {
          for (int f = 0; f < n; ++f) {
            for (int p = 0; p < order; ++p) {
              const auto it = g_counts.find({i, f, p});
              c.require(cert.required(i, f, p) == (it == g_counts.end() ? 0 : it->second),
                        "enumerated counts differ; ");
            }
          }
        }
      }
      // Five random float states on F = E u G, amplitudes summed per class.
      const auto e_counts = phase_counts(e, cert.horizon);
      for (int s = 0; s < 5; ++s) {
        const auto psi = oracle::random_state(n, rng);
        double mu = 0;
        for (int f = 0; f < n; ++f) {
          std::complex<double> sum = 0;
          for (int i = 0; i < n; ++i) {
            for (int p = 0; p < order; ++p) {
              const BigInt count = e_counts(i, f, p) + cert.required(i, f, p);
              sum += count.get_d() * psi[static_cast<std::size_t>(i)] * oracle::omega_pow(n, p);
            }
          }
          mu += std::norm(sum) / std::pow(static_cast<double>(n), cert.horizon);
        }
        c.require(mu < kFloatNullTol, "float mu(F) not zero; ");
      }
    }
  }
  const double s = seconds_since(t0);
  c.note << total << " events, m=1 for " << m_one << "/" << total << ", " << enumerated
         << " enumerated, time " << s << "s";
  c.require(total >= 200, "; too few events");
  c.require(s < kConstructSeconds, "; too slow");
}

// 9. Initial-position variant, n = 3.
void criterion_9(Check& c) {
  std::mt19937_64 rng(kSeed + 9);
  const Model m(3);
  int built = 0;
  int refused = 0;
  for (int ic = 0; ic < 3; ++ic) {
    for (const std::vector<long>& z : {std::vector<long>{1, 1, 1}, {1, 2, 1}, {3, 1, 1}}) {
      Event e = Event::empty(m, 2);
      for (int i = 0; i < 3; ++i) {
        if (i != ic) {
          e = e | cylinder(m, TPath{i});
        }
      }
      Event part = Event::empty(m, 2);
      while (part.is_empty() || initial_sites(part | e).size() != 2) {
        std::vector<TPath> paths;
        std::bernoulli_distribution coin(0.5);
        for (const auto& s : oracle::all_paths(3, 2)) {
          if (s.front() == ic && coin(rng)) {
            paths.push_back(oracle::to_path(s));
          }
        }
        part = Event(m, 2, std::move(paths));
      }
      e = e | part;
      std::uniform_int_distribution<int> q(0, 2);
      ExactState psi{z, {q(rng), q(rng), q(rng)}};
      // z at i_check must divide a power of 3 times every other z.
      bool satisfiable = true;
      for (int f = 0; f < 3; ++f) {
        long zc = z[static_cast<std::size_t>(ic)];
        const long g = std::gcd(zc, z[static_cast<std::size_t>(f)]);
        zc /= g;
        while (zc % 3 == 0) {
          zc /= 3;
        }
        satisfiable = satisfiable && zc == 1;
      }
      if (!satisfiable) {
        bool threw = false;
        try {
          build_null_superset_initial(e, psi, ic);
        } catch (const PreconditionError&) {
          threw = true;
        }
        refused += threw;
        c.require(threw, "unsatisfiable divisibility accepted; ");
        continue;
      }
      const auto cert = build_null_superset_initial(e, psi, ic);
      ++built;
      const auto report = verify_report(cert);
      c.require(report.ok, "verify failed: " + report.reason + "; ");
      // Exact per-site amplitude sums of F under psi.
      const auto sums = amplitude_sums(cert.f_counts, psi);
      c.require(std::all_of(sums.begin(), sums.end(), [](const CycNum& x) { return is_zero(x); }),
                "F not null; ");
      const auto numeric = oracle::exact_to_complex(3, psi.z, psi.q);
      double mu = 0;
      for (int f = 0; f < 3; ++f) {
        std::complex<double> sum = 0;
        for (int i = 0; i < 3; ++i) {
          for (int p = 0; p < 3; ++p) {
            sum += cert.f_counts(i, f, p).get_d() * numeric[static_cast<std::size_t>(i)] * oracle::omega_pow(3, p);
          }
        }
        mu += std::norm(sum) / std::pow(3.0, cert.horizon);
      }
      c.require(mu < kFloatNullTol, "numeric mu(F) not zero; ");
      c.require(cert.m >= 1 && cert.big_m > cert.m && cert.inner_time >= defining_time(e).time, "bad (m, M); ");
    }
  }
  // z at i_check zero, and even n.
  const Event e0 = cylinder(m, TPath{1}) | cylinder(m, TPath{2}) | cylinder(m, oracle::parse("01"));
  bool zero_refused = false;
  try {
    build_null_superset_initial(e0, ExactState{{0, 1, 1}, {0, 0, 0}}, 0);
  } catch (const PreconditionError&) {
    zero_refused = true;
  }
  const Model two(2);
  bool even_refused = false;
  try {
    build_null_superset_initial(cylinder(two, TPath{1}) | cylinder(two, oracle::parse("01")),
                                ExactState{{1, 1}, {0, 0}}, 0);
  } catch (const PreconditionError&) {
    even_refused = true;
  }
  c.require(zero_refused, "z_check = 0 accepted; ");
  c.require(even_refused, "even n accepted; ");
  c.note << built << " certificates, " << refused << " unsatisfiable cases refused";
}

// 10. Co-event engine.
void criterion_10(Check& c) {
  std::mt19937_64 rng(kSeed + 10);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::bernoulli_distribution zero(0.35);
    std::vector<double> p(8);
    double sum = 0;
    for (auto& x : p) {
      x = zero(rng) ? 0.0 : u(rng);
      sum += x;
    }
    if (sum == 0) {
      p[3] = sum = 1;
    }
    for (auto& x : p) {
      x /= sum;
    }
    const auto sys = TruncatedSystem::classical(Model(2), 2, p);
    std::vector<HistorySet> want;
    for (std::size_t k = 0; k < 8; ++k) {
      if (p[k] > 0) {
        want.push_back(HistorySet{1} << k);
      }
    }
    std::vector<HistorySet> got;
    for (const auto& co : minimal_preclusive_supports(sys)) {
      got.push_back(co.support);
    }
    std::sort(got.begin(), got.end());
    c.require(got == want, "classical supports are not the positive singletons; ");
  }

  const ExactState up{{1, 0}, {0, 0}};
  const Model two(2);
  const auto sys = TruncatedSystem::quantum(two, 3, up);
  const HistorySet e = sys.from_event(fixtures::event_e());
  c.require(sys.is_null(e), "E not null; ");
  const auto past = is_stymied(sys.from_event(cylinder(two, oracle::parse("001"))), sys);
  c.require(past.stymied && !past.self_null && past.witness == e, "Cyl(001) not stymied by E; ");
  const HistorySet same_time = sys.from_event(cylinder(two, oracle::parse("0000")) | cylinder(two, oracle::parse("0101")));
  const auto sub = is_stymied(same_time, sys);
  c.require(sub.stymied && sys.is_null(*sub.witness) && (same_time & ~*sub.witness) == 0,
            "Cyl(0000) u Cyl(0101) not stymied; ");
  c.require(sys.measure(same_time) > 0, "subevent unexpectedly null; ");
  // Every preclusive co-event denies them.
  for (const auto& co : minimal_preclusive_supports(sys)) {
    c.require(evaluate(co, sys.from_event(cylinder(two, oracle::parse("001")))) == 0 && evaluate(co, same_time) == 0,
              "stymied event affirmed; ");
  }

  // E followed by site 1 at t = 4, in the system truncated at t = 4.
  const auto later = TruncatedSystem::quantum(two, 4, up);
  std::vector<TPath> then_one;
  const Event e_at_4 = refine(fixtures::event_e(), 4);
  for (const auto& path : e_at_4.paths()) {
    if (path.back() == 1) {
      then_one.push_back(path);
    }
  }
  const auto fut = is_stymied(later.from_event(Event(two, 4, then_one)), later);
  c.require(fut.stymied, "E then site 1 not stymied; ");
  c.note << "classical fixtures 20/20 checked";
}

// 11. DP against enumeration.
void criterion_11(Check& c) {
  std::mt19937_64 rng(kSeed + 11);
  int events = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < 25; ++k) {
      std::uniform_int_distribution<int> tdist(0, n == 4 ? 3 : 4);
      const Event e = oracle::random_event(n, tdist(rng), rng);
      ++events;
      for (int t = e.time(); t <= 6; ++t) {
        const auto dp = phase_counts(e, t);
        const auto brute = oracle::counts(e, t);
        for (int i = 0; i < n; ++i) {
          for (int f = 0; f < n; ++f) {
            for (int p = 0; p < phase_order(n); ++p) {
              const auto it = brute.find({i, f, p});
              c.require(dp(i, f, p) == (it == brute.end() ? 0 : it->second), "DP differs from enumeration; ");
            }
          }
        }
      }
    }
  }
  c.note << events << " events";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Check&)>> criteria = {
      {"null fixtures A, B, C, E (exact)", criterion_1},
      {"mu(Omega) = 1, mu(Cyl(i)) = |psi_i|^2", criterion_2},
      {"decoherence independent of t", criterion_3},
      {"parity of phase counts, even n", criterion_4},
      {"phase-count lower bound", criterion_5},
      {"periodicity U^(2n), U^n, U^(4n)", criterion_6},
      {"eigensystem, Gauss sums, Landsberg-Schaar", criterion_7},
      {"null supersets for random events", criterion_8},
      {"initial-position variant, n = 3", criterion_9},
      {"co-event engine and stymied chain", criterion_10},
      {"dynamic programming vs enumeration", criterion_11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.note << " exception: " << ex.what();
    }
    failed += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first;
    const std::string note = c.note.str();
    if (!note.empty()) {
      std::cout << "  [" << note << "]";
    }
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
