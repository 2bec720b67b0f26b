#include "chordaffect/rationalize.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>

#include "support/oracles.hpp"

namespace chordaffect {
namespace {

Proportion P(std::initializer_list<std::uint64_t> t) { return Proportion::from_terms(t); }

RationalizeConfig tol(double t) {
  RationalizeConfig c;
  c.tolerance = t;
  return c;
}

TEST(RationalizeTest, SpecExamples) {
  const std::vector<double> hz{300, 400, 500};
  EXPECT_EQ(rationalize(hz), P({3, 4, 5}));
  const std::vector<double> exact{220, 275, 330};
  EXPECT_EQ(rationalize(exact), P({4, 5, 6}));
  const std::array<double, 3> major{0, 4, 7};
  EXPECT_EQ(rationalize(semitones_to_freqs(major, 261.63)), P({4, 5, 6}));
}

TEST(RationalizeTest, AgreesWithBruteForceOnTempered) {
  // Pair errors 0.787% (5/4), 0.908% (6/5) and 0.113% (3/2); worst inside 1%.
  const std::array<double, 3> major{0, 4, 7};
  const auto f = semitones_to_freqs(major, 1.0);
  const auto expected = oracle::brute_force_triad(f, 0.01);
  ASSERT_TRUE(expected);
  EXPECT_EQ(rationalize(f).terms().size(), 3u);
  EXPECT_TRUE(std::equal(expected->begin(), expected->end(), rationalize(f).terms().begin()));
  EXPECT_NEAR(rationalize_detailed(f).max_error, 0.0090756983044575357, 1e-12);
}

TEST(RationalizeTest, UnsortedInputAndUnison) {
  const std::vector<double> hz{500, 300, 400};
  EXPECT_EQ(rationalize(hz), P({3, 4, 5}));
  const std::vector<double> same{440, 440, 880};
  EXPECT_EQ(rationalize(same), P({1, 1, 2}));
  const std::vector<double> one{123.4};
  EXPECT_EQ(rationalize(one), P({1}));
}

TEST(RationalizeTest, MinorChordFoundThroughInverseWriting) {
  // 10:12:15 = /6:/5:/4
  const std::vector<double> hz{400, 480, 600};
  EXPECT_EQ(rationalize(hz), P({10, 12, 15}));
}

TEST(RationalizeTest, NoProportionFound) {
  // Ratio ~97 cannot be written with terms <= 64.
  const std::vector<double> wide{10, 970};
  EXPECT_THROW(rationalize(wide), NoProportionFound);
  const std::vector<double> pi{1.0, 3.14159265};
  RationalizeConfig c = tol(0.0001);
  c.max_term = 6;
  EXPECT_THROW(rationalize(pi, c), NoProportionFound);
}

TEST(RationalizeTest, ConfigAndInputValidation) {
  const std::vector<double> hz{300, 400, 500};
  EXPECT_THROW(rationalize(hz, tol(0.0)), InputError);
  EXPECT_THROW(rationalize(hz, tol(0.06)), InputError);
  RationalizeConfig c;
  c.max_term = 1;
  EXPECT_THROW(rationalize(hz, c), InputError);
  c = {};
  c.max_voices = 2;
  EXPECT_THROW(rationalize(hz, c), InputError);
  const std::vector<double> bad{300, -1};
  EXPECT_THROW(rationalize(bad), InputError);
  EXPECT_THROW(rationalize(std::vector<double>{}), InputError);
}

TEST(RationalizeTest, EightVoices) {
  const std::vector<double> harmonics{1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_EQ(rationalize(harmonics), P({1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(RationalizeTest, MirrorEquivariance) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> jitter(-0.004, 0.004);
  for (int n = 0; n < 200; ++n) {
    std::vector<double> f{1.0};
    for (int k = 0; k < 2; ++k) f.push_back(f.back() * (1.0 + std::abs(jitter(rng)) * 100));
    std::vector<double> g;
    for (auto it = f.rbegin(); it != f.rend(); ++it) g.push_back(1.0 / *it);
    try {
      const auto a = rationalize_detailed(f, tol(0.02));
      const auto b = rationalize_detailed(g, tol(0.02));
      if (a.mirror_tie) continue;
      EXPECT_EQ(b.proportion, mirror(a.proportion));
    } catch (const NoProportionFound&) {
    }
  }
}

TEST(RationalizePropertyTest, RecoveryToleranceScaleDeterminism) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> scale(0.5, 2000.0);
  for (int n = 0; n < 300; ++n) {
    const auto p = Proportion::from_terms(oracle::random_terms(rng, 2 + n % 3, 32));
    const double s = scale(rng);
    std::vector<double> f;
    for (auto t : p.terms()) f.push_back(static_cast<double>(t) * s);
    const auto got = rationalize(f, tol(0.001));
    EXPECT_EQ(got, p) << p.to_string();

    std::vector<double> g;
    for (double x : f) g.push_back(x * 3.7);
    EXPECT_EQ(rationalize(g, tol(0.001)), got);
    EXPECT_EQ(rationalize(f, tol(0.001)), got);

    // soundness at a loose tolerance
    const auto loose = rationalize(f, tol(0.03));
    const auto t = loose.terms();
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        const double c = static_cast<double>(t[j]) / static_cast<double>(t[i]);
        EXPECT_LE(std::abs(c / (f[j] / f[i]) - 1.0), 0.03);
      }
    }
  }
}

TEST(SemitonesTest, Examples) {
  const std::array<double, 2> octave{0, 12};
  EXPECT_EQ(semitones_to_freqs(octave, 440), (std::vector<double>{440, 880}));
  const std::array<double, 3> major{0, 4, 7};
  const auto f = semitones_to_freqs(major, 300);
  EXPECT_DOUBLE_EQ(f[0], 300);
  EXPECT_NEAR(f[1], 377.976314968461949, 1e-9);
  EXPECT_NEAR(f[2], 449.492123063004450, 1e-9);
  const std::array<double, 1> root{0};
  EXPECT_EQ(semitones_to_freqs(root, 261.63), (std::vector<double>{261.63}));
  EXPECT_THROW(semitones_to_freqs(root, 0.0), InputError);
}

TEST(ParsePitchTest, Examples) {
  EXPECT_DOUBLE_EQ(parse_pitch("A4"), 440.0);
  EXPECT_DOUBLE_EQ(parse_pitch("A5"), 880.0);
  EXPECT_NEAR(parse_pitch("C4"), 261.625565300598635, 1e-9);
  EXPECT_DOUBLE_EQ(parse_pitch("C#4"), parse_pitch("Db4"));
  EXPECT_DOUBLE_EQ(parse_pitch("a4"), 440.0);
  EXPECT_NEAR(parse_pitch("C-1"), 440.0 * std::exp2(-69.0 / 12), 1e-12);
}

TEST(ParsePitchTest, ErrorsCarryPosition) {
  auto position_of = [](const char* s) -> std::size_t {
    try {
      parse_pitch(s);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  EXPECT_EQ(position_of("H4"), 0u);
  EXPECT_EQ(position_of("C"), 1u);
  EXPECT_EQ(position_of("C#x"), 2u);
  EXPECT_EQ(position_of("C44"), 2u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("C-2"), 1u);
}

}  // namespace
}  // namespace chordaffect
