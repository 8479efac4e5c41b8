#include <gtest/gtest.h>

#include <random>

#include "hopper/errors.hpp"
#include "hopper/model.hpp"
#include "oracle.hpp"

using namespace hopper;

TEST(Model, PhaseOrder) {
  EXPECT_EQ(Model(2).order(), 4);
  EXPECT_EQ(Model(3).order(), 3);
  EXPECT_EQ(Model(6).order(), 12);
  EXPECT_THROW(Model(1), PreconditionError);
}

TEST(Model, TransferPhase) {
  EXPECT_EQ(transfer_phase(Model(2), 0, 1), 1);
  EXPECT_EQ(transfer_phase(Model(5), 0, 3), 4);
  for (int n = 2; n <= 7; ++n) {
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(transfer_phase(Model(n), j, j), 0);
    }
  }
}

TEST(Model, PathPhase) {
  EXPECT_EQ(path_phase(Model(2), oracle::parse("010")), 2);
  EXPECT_EQ(path_phase(Model(5), oracle::parse("01203")), 0);
  EXPECT_EQ(path_phase(Model(5), oracle::parse("00103")), 1);
  EXPECT_THROW(path_phase(Model(2), oracle::parse("012")), PreconditionError);
}

TEST(Model, PathAmplitude) {
  const ExactState up{{1, 0}, {0, 0}};
  const CycNum a = path_amplitude(Model(2), oracle::parse("000"), up);
  EXPECT_EQ(a.sqrt_n_exp(), 2);
  EXPECT_EQ(a.coeffs(), (std::vector<BigInt>{1, 0, 0, 0}));
  const CycNum b = path_amplitude(Model(2), oracle::parse("010"), up);
  EXPECT_EQ(b.coeffs(), (std::vector<BigInt>{0, 0, 1, 0}));
  const ExactState flat{{1, 1, 1}, {0, 0, 0}};
  const CycNum c = path_amplitude(Model(3), oracle::parse("12"), flat);
  EXPECT_EQ(c.sqrt_n_exp(), 1);
  EXPECT_EQ(c.coeffs(), (std::vector<BigInt>{0, 1, 0}));
}

TEST(Model, FloatAmplitudeMatchesOracle) {
  std::mt19937_64 rng(3);
  for (int n : {2, 3, 4, 5}) {
    const auto psi = oracle::random_state(n, rng);
    for (const auto& s : oracle::all_paths(n, 3)) {
      const auto got = path_amplitude(Model(n), oracle::to_path(s), FloatState{psi});
      EXPECT_NEAR(std::abs(got - oracle::amplitude(n, s, psi)), 0.0, 1e-12);
    }
  }
}

TEST(Model, StateValidation) {
  EXPECT_THROW(validate(Model(2), ExactState{{0, 0}, {0, 0}}), PreconditionError);
  EXPECT_THROW(validate(Model(2), ExactState{{1, 0}, {4, 0}}), PreconditionError);
  EXPECT_THROW(validate(Model(2), ExactState{{1}, {0}}), PreconditionError);
  EXPECT_THROW(validate(Model(2), FloatState{{1.0, 1.0}}), PreconditionError);
  EXPECT_NO_THROW(validate(Model(2), FloatState{{1.0, 0.0}}));
}

TEST(Model, AdmissiblePhases) {
  EXPECT_EQ(admissible_phases(Model(2), 0, 0), (std::vector<int>{0, 2}));
  EXPECT_EQ(admissible_phases(Model(2), 0, 1), (std::vector<int>{1, 3}));
  EXPECT_EQ(admissible_phases(Model(3), 0, 2), (std::vector<int>{0, 1, 2}));
}

TEST(Model, JoinAndReverse) {
  const TPath a = oracle::parse("012");
  const TPath b = oracle::parse("210");
  EXPECT_EQ(a.joined(b), oracle::parse("01210"));
  EXPECT_EQ(a.reversed(), b);
  EXPECT_THROW(a.joined(oracle::parse("01")), PreconditionError);
}

TEST(ModelProperty, ReversalAndConcatenation) {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 7; ++n) {
    const Model model(n);
    std::uniform_int_distribution<int> site(0, n - 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> s1{site(rng)};
      std::vector<int> s2;
      for (int k = 0; k < 5; ++k) {
        s1.push_back(site(rng));
      }
      s2.push_back(s1.back());
      for (int k = 0; k < 4; ++k) {
        s2.push_back(site(rng));
      }
      const TPath p1(s1);
      const TPath p2(s2);
      EXPECT_EQ(path_phase(model, p1), path_phase(model, p1.reversed()));
      EXPECT_EQ(path_phase(model, p1.joined(p2)),
                (path_phase(model, p1) + path_phase(model, p2)) % model.order());
      EXPECT_EQ(path_phase(model, p1), oracle::phase_of(n, s1));
    }
  }
}

TEST(ModelProperty, EvenParity) {
  for (int n : {2, 4, 6}) {
    for (int t = 0; t <= 6 && std::pow(n, t + 1) <= 300000; ++t) {
      for (const auto& s : oracle::all_paths(n, t)) {
        EXPECT_EQ((path_phase(Model(n), oracle::to_path(s)) + s.front() + s.back()) % 2, 0);
      }
    }
  }
}
