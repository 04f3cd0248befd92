#include <gtest/gtest.h>

#include <random>

#include "audioactive/audio_string.hpp"
#include "audioactive/errors.hpp"
#include "audioactive/splitting.hpp"
#include "oracle.hpp"

using namespace audioactive;

namespace {

AudioString S(const std::string& literal) { return AudioString::parse(literal); }

}  // namespace

TEST(SplitsAfter, Examples) {
  EXPECT_FALSE(splits_after(S("22"), S("1")));
  EXPECT_FALSE(splits_after(S("22"), S("22")));
  EXPECT_TRUE(splits_after(S("4"), S("1")));
  EXPECT_TRUE(splits_after(S("4"), S("2113")));
  EXPECT_FALSE(splits_after(S("12"), S("22")));
  EXPECT_TRUE(splits_after(S("21"), S("22")));
  EXPECT_TRUE(splits_after(S("22"), S("3113")));
}

TEST(FirstDigits, OfTwentyTwoAndOne) {
  Splitter sp;
  EXPECT_EQ(sp.first_digits(S("22").view()).to_vector(), (std::vector<Digit>{2}));
  EXPECT_EQ(sp.first_digits(S("1").view()).to_vector(), (std::vector<Digit>{1, 2, 3}));
  EXPECT_EQ(sp.first_digits(S("3").view()).to_vector(), (std::vector<Digit>{1, 3}));
}

TEST(SplitAtoms, Examples) {
  EXPECT_EQ(split_atoms(S("22")).atoms, (std::vector<AudioString>{S("22")}));
  for (const char* d : {"1", "2", "3", "7"}) {
    EXPECT_EQ(split_atoms(S(d)).atoms, (std::vector<AudioString>{S(d)}));
  }
  const AudioString s = evolve(S("1"), 9);
  const auto atoms = split_atoms(s).atoms;
  EXPECT_EQ(split_atoms(s).concat(), s);
  AudioString left;
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    left.append(atoms[i]);
    AudioString right;
    for (std::size_t j = i + 1; j < atoms.size(); ++j) right.append(atoms[j]);
    EXPECT_TRUE(oracle::splits(left.to_literal(), right.to_literal(), 20));
  }
}

TEST(SplitsAfter, AgreesWithBruteForce) {
  std::mt19937_64 rng(201);
  Splitter sp;
  int disagreements = 0;
  for (int k = 0; k < 2000; ++k) {
    const std::string w = oracle::random_string(rng, 2, 12);
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(1, w.size() - 1)(rng);
    const std::string l = w.substr(0, cut), r = w.substr(cut);
    const bool fast = sp.splits_after(S(l).view(), S(r).view());
    if (fast != oracle::splits(l, r, 20)) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(SplitsAfter, ImpliesFiniteHorizonSplitAtAnyHorizon) {
  std::mt19937_64 rng(202);
  for (int k = 0; k < 300; ++k) {
    const std::string w = oracle::random_string(rng, 2, 10);
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
      const AudioString l = S(w.substr(0, cut)), r = S(w.substr(cut));
      if (!splits_after(l, r)) continue;
      EXPECT_TRUE(oracle_split_check(l, r, 28)) << w << " @" << cut;
    }
  }
}

TEST(OracleSplitCheck, MatchesTestOracle) {
  EXPECT_FALSE(oracle_split_check(S("22"), S("22"), 1));
  std::mt19937_64 rng(203);
  for (int k = 0; k < 500; ++k) {
    const std::string l = oracle::random_string(rng, 1, 6);
    const std::string r = oracle::random_string(rng, 1, 6);
    EXPECT_EQ(oracle_split_check(S(l), S(r), 15), oracle::splits(l, r, 15));
  }
}

TEST(SplitAtoms, ConcatenationLaw) {
  std::mt19937_64 rng(204);
  for (int k = 0; k < 200; ++k) {
    AudioString s = S(oracle::random_string(rng, 1, 20));
    auto atoms = split_atoms(s).atoms;
    for (int day = 0; day < 12; ++day) {
      AudioString joined;
      for (const auto& a : atoms) joined.append(a);
      ASSERT_EQ(joined, s);
      s = jhc(s);
      for (auto& a : atoms) a = jhc(a);
    }
  }
}

TEST(SplitAtoms, AtomsDoNotSplitFurther) {
  std::mt19937_64 rng(205);
  Splitter sp;
  for (int k = 0; k < 200; ++k) {
    const AudioString s = S(oracle::random_string(rng, 1, 30));
    for (const auto& a : sp.split_atoms(s).atoms) EXPECT_TRUE(sp.is_atom(a.view()));
  }
}

TEST(ChunkAtom, CutsThatHoldForEveryContinuation) {
  std::mt19937_64 rng(206);
  Splitter sp;
  // A cut that holds for every continuation holds with none.
  for (int k = 0; k < 400; ++k) {
    const AudioString c = S(oracle::random_string(rng, 2, 10));
    if (!sp.is_chunk_atom(c.view())) EXPECT_FALSE(sp.is_atom(c.view())) << c.to_literal();
  }

  for (int k = 0; k < 400; ++k) {
    const std::string c = oracle::random_string(rng, 2, 10);
    if (sp.is_chunk_atom(S(c).view())) continue;
    for (int j = 0; j < 5; ++j) {
      const std::string t = oracle::random_string(rng, 1, 8);
      const auto cuts = sp.cut_points(S(c + t).view());
      EXPECT_TRUE(!cuts.empty() && cuts.front() < c.size()) << c << '|' << t;
    }
  }
}
