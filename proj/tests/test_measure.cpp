#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "hopper/errors.hpp"
#include "hopper/fixtures.hpp"
#include "hopper/measure.hpp"
#include "oracle.hpp"

using namespace hopper;

namespace {

void expect_counts(const PhaseCountTable& table, const std::map<oracle::Key, long>& want) {
  const Model& m = table.model();
  for (int i = 0; i < m.n(); ++i) {
    for (int f = 0; f < m.n(); ++f) {
      for (int p = 0; p < m.order(); ++p) {
        const auto it = want.find({i, f, p});
        const long w = it == want.end() ? 0 : it->second;
        EXPECT_EQ(table(i, f, p), w) << "cell (" << i << "," << f << "," << p << ")";
      }
    }
  }
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

}  // namespace

TEST(Measure, FixtureCounts) {
  expect_counts(phase_counts(fixtures::event_a()), {{{0, 0, 0}, 1}, {{0, 0, 2}, 1}});
  std::map<oracle::Key, long> b;
  for (int p = 0; p < 5; ++p) {
    b[{0, 3, p}] = 1;
  }
  expect_counts(phase_counts(fixtures::event_b()), b);
  expect_counts(phase_counts(cylinder(Model(2), TPath{0}), 3),
                {{{0, 0, 0}, 1}, {{0, 0, 2}, 3}, {{0, 1, 1}, 3}, {{0, 1, 3}, 1}});
  EXPECT_THROW(phase_counts(fixtures::event_a(), 1), PreconditionError);
}

TEST(Measure, DecoherenceBasics) {
  const Model m(2);
  const InitialState psi = FloatState{{std::sqrt(0.5), std::complex<double>(0, std::sqrt(0.5))}};
  const auto omega = Event::full(m, 0);
  EXPECT_NEAR(std::abs(std::get<std::complex<double>>(decoherence(omega, omega, psi)) - 1.0), 0.0, 1e-12);
  const auto a = cylinder(m, oracle::parse("001"));
  const auto b = cylinder(m, oracle::parse("110"));
  EXPECT_NEAR(std::abs(std::get<std::complex<double>>(decoherence(a, b, psi))), 0.0, 1e-15);
  const auto exact = std::get<CycNum>(decoherence(a, b, ExactState{{1, 1}, {0, 1}}));
  EXPECT_TRUE(is_zero(exact));
}

TEST(Measure, CylinderMeasures) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    const auto psi = oracle::random_state(n, rng);
    for (int i = 0; i < n; ++i) {
      const auto r = measure(cylinder(Model(n), TPath{i}), FloatState{psi});
      EXPECT_NEAR(r.numeric, std::norm(psi[static_cast<std::size_t>(i)]), 1e-12);
      EXPECT_EQ(r.mode(), "float");
    }
  }
}

TEST(Measure, NullFixtures) {
  const ExactState any{{2, -1}, {1, 3}};
  const auto a = measure(fixtures::event_a(), any);
  EXPECT_TRUE(a.is_zero);
  EXPECT_FALSE(a.thresholded);
  EXPECT_EQ(a.mode(), "exact");
  EXPECT_TRUE(measure(fixtures::event_b(), ExactState{{1, 2, 3, 4, 5}, {0, 1, 2, 3, 4}}).is_zero);
  EXPECT_TRUE(measure(fixtures::event_c(), fixtures::state_c()).is_zero);
  EXPECT_FALSE(measure(fixtures::event_c(), ExactState{{1, 1, 0}, {0, 0, 0}}).is_zero);
  EXPECT_TRUE(measure(fixtures::event_e(), fixtures::state_e()).is_zero);
  EXPECT_FALSE(measure(Event::full(Model(2), 0), fixtures::state_e()).is_zero);
  // Only histories starting where psi vanishes.
  EXPECT_TRUE(measure(cylinder(Model(3), oracle::parse("21")), ExactState{{1, 1, 0}, {0, 0, 0}}).is_zero);
}

TEST(Measure, UniversalNullity) {
  EXPECT_TRUE(is_null_universal(fixtures::event_a()));
  EXPECT_TRUE(is_null_universal(fixtures::event_b()));
  EXPECT_FALSE(is_null_universal(fixtures::event_c()));
  EXPECT_TRUE(is_null_universal(fixtures::event_e()));
  EXPECT_FALSE(is_null_universal(Event::full(Model(3), 0)));
}

TEST(Measure, FloatThreshold) {
  const auto r = measure(fixtures::event_a(), FloatState{{0.6, 0.8}});
  EXPECT_TRUE(r.is_zero);
  EXPECT_TRUE(r.thresholded);
}

TEST(Measure, ExactMatchesOracle) {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Event e = oracle::random_event(n, n == 4 ? 2 : 3, rng);
      const ExactState s = random_exact(n, rng);
      const auto r = measure(e, s);
      const double want = oracle::measure(e, e.time(), oracle::exact_to_complex(n, s.z, s.q));
      EXPECT_NEAR(r.numeric, want, 1e-10);
      EXPECT_EQ(r.is_zero, std::abs(want) < 1e-12);
    }
  }
}

TEST(MeasureProperty, TimeIndependence) {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Event e = oracle::random_event(n, n <= 3 ? 3 : 2, rng);
      const Event f = oracle::random_event(n, n <= 3 ? 2 : 1, rng);
      const ExactState s = random_exact(n, rng);
      const CycNum base = std::get<CycNum>(decoherence(e, f, s));
      const int t0 = std::max(e.time(), f.time());
      for (int t = t0 + 1; t <= t0 + 4; ++t) {
        EXPECT_TRUE(std::get<CycNum>(decoherence(e, f, s, t)) == base);
      }
    }
  }
}

TEST(MeasureProperty, HermitianAndAdditive) {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const FloatState psi{oracle::random_state(n, rng)};
      const Event a = oracle::random_event(n, 2, rng);
      const Event b = ~a & oracle::random_event(n, 2, rng);
      const Event c = oracle::random_event(n, 1, rng);
      auto d = [&](const Event& x, const Event& y) { return std::get<std::complex<double>>(decoherence(x, y, psi)); };
      EXPECT_NEAR(std::abs(d(a, c) - std::conj(d(c, a))), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(d(a | b, c) - d(a, c) - d(b, c)), 0.0, 1e-12);
      EXPECT_GE(measure(a, psi).numeric, -1e-12);
      EXPECT_NEAR(std::abs(d(a, c) - oracle::decoherence(a, c, 2, psi.psi)), 0.0, 1e-12);
    }
    EXPECT_EQ(measure(Event::empty(Model(n)), FloatState{oracle::random_state(n, rng)}).numeric, 0.0);
  }
}

TEST(MeasureProperty, GramMatrixIsPositive) {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const FloatState psi{oracle::random_state(n, rng)};
      std::vector<Event> events;
      for (int k = 0; k < 6; ++k) {
        events.push_back(oracle::random_event(n, 2, rng));
      }
      Eigen::MatrixXcd gram(6, 6);
      for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) {
          gram(r, c) = std::get<std::complex<double>>(decoherence(events[static_cast<std::size_t>(r)],
                                                                  events[static_cast<std::size_t>(c)], psi));
        }
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
      EXPECT_GE(solver.eigenvalues().minCoeff(), -1e-9);
    }
  }
}

TEST(MeasureProperty, ParityOfCounts) {
  std::mt19937_64 rng(10);
  for (int n : {2, 4, 6}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Event e = oracle::random_event(n, n == 6 ? 1 : 2, rng);
      const auto table = phase_counts(e, e.time() + 3);
      for (int i = 0; i < n; ++i) {
        for (int f = 0; f < n; ++f) {
          for (int p = 0; p < 2 * n; ++p) {
            if ((p + i + f) % 2 == 1) {
              EXPECT_EQ(table(i, f, p), 0);
            }
          }
        }
      }
    }
  }
}

TEST(MeasureProperty, DynamicProgrammingMatchesEnumeration) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Event e = oracle::random_event(n, n == 4 ? 2 : 3, rng);
      for (int t = e.time(); t <= (n == 4 ? 5 : 6); ++t) {
        expect_counts(phase_counts(e, t), oracle::counts(e, t));
      }
    }
  }
}
