#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "audioactive/cosmology.hpp"
#include "audioactive/errors.hpp"
#include "oracle.hpp"

using namespace audioactive;

namespace {

AudioString S(const std::string& literal) { return AudioString::parse(literal); }

const PeriodicTable& table() {
  static const PeriodicTable t = derive_periodic_table(S("1"));
  return t;
}

// Longevity straight from the definition: evolve the whole string and split
// it afresh every day.
int direct_longevity(AudioString s, int cap) {
  for (int day = 0; day <= cap; ++day) {
    const auto atoms = split_atoms(s).atoms;
    if (std::all_of(atoms.begin(), atoms.end(),
                    [](const AudioString& a) { return table().is_stable(a); })) {
      return day;
    }
    s = jhc(s);
  }
  return -1;
}

std::vector<GenerationSet> generations(const CosmoOptions& opts, int count) {
  CosmoSearch search(table(), opts);
  std::vector<GenerationSet> out{{0, {AudioString{}}}};
  for (int i = 0; i < count; ++i) out.push_back(search.next_generation(out.back()).next);
  return out;
}

}  // namespace

TEST(Screen, WorkedExamples) {
  for (int depth = 1; depth <= 8; ++depth) {
    EXPECT_FALSE(screen(S("1232"), Sex::Female, depth)) << depth;
  }
  EXPECT_FALSE(screen(S("3233"), Sex::Female, 2));
  EXPECT_TRUE(screen(S("1221"), Sex::Female, 8));
  EXPECT_THROW(screen(S("1221"), Sex::Female, 0), std::invalid_argument);
}

TEST(Screen, TwoLetteredStringsPass) {
  for (const char* s : {"1", "2", "33", "12"}) {
    EXPECT_TRUE(screen(S(s), Sex::Female, 8));
    EXPECT_TRUE(screen(S(s), Sex::Male, 8));
  }
}

TEST(Screen, DescendantsOfLongHistoriesPass) {
  std::mt19937_64 rng(301);
  for (int k = 0; k < 200; ++k) {
    const AudioString old = evolve(S(oracle::random_string(rng, 1, 8)), 10);
    if (old.size() < 8) continue;
    // Any female factor of a 10-day-old string has a grammatical history.
    const std::size_t start = 2 * std::uniform_int_distribution<std::size_t>(
                                      0, old.size() / 2 - 3)(rng);
    EXPECT_TRUE(screen(old.substr(start, 6), Sex::Female, 8)) << old.to_literal();
  }
}

TEST(Screen, DeeperScreensAcceptLess) {
  std::mt19937_64 rng(302);
  for (int k = 0; k < 1500; ++k) {
    const AudioString w = S(oracle::random_string(rng, 3, 14));
    for (const Sex sex : {Sex::Female, Sex::Male}) {
      for (int depth = 1; depth < 9; ++depth) {
        if (screen(w, sex, depth + 1)) EXPECT_TRUE(screen(w, sex, depth)) << w.to_literal();
      }
    }
  }
}

TEST(Extensions, FifteenForms) {
  const auto e = extensions(S("12"));
  ASSERT_EQ(e.size(), 15u);
  for (const char* s : {"112", "121", "1121"}) {
    EXPECT_NE(std::find(e.begin(), e.end(), S(s)), e.end()) << s;
  }
  std::vector<std::string> words{""};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words) {
      for (const char c : {'1', '2', '3'}) next.push_back(w + c);
    }
    words = next;
    for (const auto& w : words) {
      const auto x = extensions(S(w));
      // c.w and w.c coincide exactly when w is a power of c.
      const bool constant = w.find_first_not_of(w[0]) == std::string::npos;
      EXPECT_EQ(std::set<AudioString>(x.begin(), x.end()).size(), constant ? 14u : 15u) << w;
    }
  }
}

TEST(Longevity, ElementsAreAlreadyDecayed) {
  EXPECT_EQ(longevity(S("22"), table(), 50).days, 0);
  LongevityEngine engine(table());
  for (const auto& e : table().elements()) EXPECT_EQ(engine.days(e.string, 1), 0);
}

TEST(Longevity, MatchesDirectEvolution) {
  std::mt19937_64 rng(303);
  LongevityEngine engine(table());
  for (int k = 0; k < 150; ++k) {
    const AudioString s = S(oracle::random_string(rng, 1, 10));
    const int expected = direct_longevity(s, 29);
    ASSERT_GE(expected, 0) << s.to_literal();
    EXPECT_EQ(engine.days(s, 50), expected) << s.to_literal();
  }
}

TEST(Longevity, FinalCompoundCountsEveryAtom) {
  const AudioString s = S("1");
  const LongevityResult r = longevity(s, table(), 50);
  std::uint64_t total = 0;
  for (const auto& [c, n] : r.final_compound) {
    EXPECT_TRUE(std::holds_alternative<CommonElement>(c));
    total += n;
  }
  EXPECT_EQ(total, split_atoms(evolve(s, r.days)).atoms.size());
}

TEST(Longevity, ExoticDigitsEndInTransuranicElements) {
  const LongevityResult r = longevity(S("5"), table(), 50);
  int exotic = 0;
  for (const auto& [c, n] : r.final_compound) {
    if (std::holds_alternative<TransuranicElement>(c)) exotic += static_cast<int>(n);
  }
  EXPECT_EQ(exotic, 1);
}

TEST(Longevity, CapBreachNamesTheString) {
  try {
    longevity(S("1"), table(), 2);
    FAIL() << "expected LongevityCapExceeded";
  } catch (const LongevityCapExceeded& e) {
    EXPECT_EQ(e.literal(), "1");
    EXPECT_EQ(e.cap_days(), 2);
  }
}

TEST(Cosmo, FirstGenerationIsFilteredTwoDigitStrings) {
  const auto g = generations(CosmoOptions{}, 1);
  ASSERT_FALSE(g[1].members.empty());
  for (const auto& m : g[1].members) {
    EXPECT_EQ(m.size(), 2u);
    EXPECT_TRUE(screen(m, Sex::Female, kDefaultScreenDepth));
  }
}

TEST(Cosmo, MembersExtendTheirPredecessors) {
  const auto g = generations(CosmoOptions{}, 7);
  for (std::size_t i = 1; i < g.size(); ++i) {
    const std::set<AudioString> prev(g[i - 1].members.begin(), g[i - 1].members.end());
    for (const auto& m : g[i].members) {
      EXPECT_EQ(m.size(), 2 * i);
      EXPECT_TRUE(prev.count(m.substr(0, m.size() - 2))) << m.to_literal();
      EXPECT_TRUE(screen(m, Sex::Female, kDefaultScreenDepth));
    }
  }
}

TEST(Cosmo, DeeperScreeningKeepsSubsets) {
  CosmoOptions deep;
  deep.depth = kDefaultScreenDepth + 1;
  const auto a = generations(CosmoOptions{}, 7);
  const auto b = generations(deep, 7);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::set<AudioString> wide(a[i].members.begin(), a[i].members.end());
    for (const auto& m : b[i].members) EXPECT_TRUE(wide.count(m)) << m.to_literal();
  }
}

TEST(Cosmo, ResultDoesNotDependOnThreadCount) {
  CosmoOptions one, three;
  three.threads = 3;
  one.generation_cap = three.generation_cap = 8;
  const ProofCertificate a = cosmo(table(), one);
  const ProofCertificate b = cosmo(table(), three);
  EXPECT_EQ(a.generations, b.generations);
  EXPECT_EQ(a.max_longevity, b.max_longevity);
}

TEST(Cosmo, StoppingAtTheCapIsNotAProof) {
  CosmoOptions opts;
  opts.generation_cap = 3;
  const ProofCertificate c = cosmo(table(), opts);
  EXPECT_EQ(c.status, ProofStatus::NotProven);
  EXPECT_EQ(c.halted_at, 0);
  EXPECT_EQ(c.generations.size(), 3u);
  EXPECT_EQ(c.derived_n, c.max_longevity + c.depth + 1);
  EXPECT_THROW(c.require_proven(), NonHalting);
}

TEST(Cosmo, ShortLongevityCapIsALoudFailure) {
  CosmoOptions opts;
  opts.cap_days = 3;
  opts.generation_cap = 5;
  EXPECT_THROW(cosmo(table(), opts), LongevityCapExceeded);
}

TEST(Cosmo, RejectsBadOptions) {
  CosmoOptions opts;
  opts.depth = 0;
  EXPECT_THROW(CosmoSearch(table(), opts), std::invalid_argument);
}
