#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "audioactive/errors.hpp"
#include "audioactive/splitting.hpp"
#include "audioactive/table.hpp"
#include "oracle.hpp"

using namespace audioactive;

namespace {

AudioString S(const std::string& literal) { return AudioString::parse(literal); }

const PeriodicTable& table() {
  static const PeriodicTable t = derive_periodic_table(S("1"));
  return t;
}

std::set<std::string> strings_of(const PeriodicTable& t) {
  std::set<std::string> out;
  for (const auto& e : t.elements()) out.insert(e.string.to_literal());
  return out;
}

}  // namespace

TEST(Table, NinetyTwoClosedElements) {
  EXPECT_EQ(table().size(), 92u);
  EXPECT_TRUE(table().is_closed());
}

TEST(Table, TwentyTwoDecaysToItself) {
  const auto id = table().find(S("22"));
  ASSERT_TRUE(id);
  EXPECT_EQ(table().element(*id).products, std::vector<ElementId>{*id});
}

TEST(Table, KnownDecayChains) {
  const auto name = [](ElementId id) { return table().element(id).string.to_literal(); };
  const auto products_of = [&](const char* s) {
    std::vector<std::string> out;
    for (const ElementId p : table().element(*table().find(S(s))).products) {
      out.push_back(name(p));
    }
    return out;
  };
  EXPECT_EQ(products_of("3"), std::vector<std::string>{"13"});
  EXPECT_EQ(products_of("13"), std::vector<std::string>{"1113"});
  EXPECT_EQ(products_of("1113"), std::vector<std::string>{"3113"});
  EXPECT_EQ(products_of("13112221133211322112211213322112"),
            (std::vector<std::string>{"11132", "13", "22", "12",
                                      "312211322212221121123222112"}));
}

TEST(Table, ProductsConcatenateToTheDescription) {
  for (const auto& e : table().elements()) {
    AudioString joined;
    for (const ElementId p : e.products) joined.append(table().element(p).string);
    EXPECT_EQ(joined, jhc(e.string)) << e.string.to_literal();
    EXPECT_EQ(decay_products(e, table()), e.products);
  }
}

TEST(Table, EveryElementHasAParentInTheTable) {
  std::vector<int> indegree(table().size() + 1, 0);
  for (const auto& e : table().elements()) {
    for (const ElementId p : e.products) ++indegree[p];
  }
  for (std::size_t id = 1; id <= table().size(); ++id) EXPECT_GT(indegree[id], 0);
}

TEST(Table, ElementsAreAtomsOverTheStandardAlphabet) {
  Splitter sp;
  for (const auto& e : table().elements()) {
    EXPECT_TRUE(e.string.is_standard());
    EXPECT_TRUE(sp.is_atom(e.string.view())) << e.string.to_literal();
  }
}

TEST(Table, SeedIndependence) {
  for (const char* seed : {"2", "3", "11131", "312"}) {
    const PeriodicTable t = derive_common_elements(S(seed));
    EXPECT_EQ(strings_of(t), strings_of(table())) << seed;
    ASSERT_EQ(t.size(), table().size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(t.elements()[i].products, table().elements()[i].products);
    }
  }
}

TEST(Table, SeedWithoutTheCommonCoreFails) {
  // 22 feeds nothing back, so its closure has no element besides itself.
  const PeriodicTable t = derive_common_elements(S("22"));
  EXPECT_EQ(t.size(), 1u);
}

TEST(Table, ConstructorValidatesIds) {
  std::vector<Element> bad{{2, S("22"), {2}}};
  EXPECT_THROW(PeriodicTable(S("22"), bad), std::invalid_argument);
  std::vector<Element> unsorted{{1, S("3"), {}}, {2, S("13"), {}}};
  EXPECT_THROW(PeriodicTable(S("3"), unsorted), std::invalid_argument);
}

TEST(Transuranic, TwoFamiliesAtFour) {
  const auto f = derive_transuranic(4);
  ASSERT_EQ(f.size(), 2u);
  std::vector<std::string> patterns{f[0].to_string(), f[1].to_string()};
  EXPECT_EQ(patterns, (std::vector<std::string>{"1311222113321132211221121332211*",
                                                "31221132221222112112322211*"}));
  EXPECT_EQ(table().transuranic(), f);
}

TEST(Transuranic, FamiliesAreUniformInTheExoticDigit) {
  const auto base = derive_transuranic(4);
  for (Digit n = 5; n <= 9; ++n) EXPECT_EQ(derive_transuranic(n), base) << n;
  EXPECT_EQ(derive_transuranic(23), base);
}

TEST(Transuranic, InstancesDecayIntoCommonElementsAndEachOther) {
  Splitter sp;
  const auto& fams = table().transuranic();
  for (const Digit n : {4u, 7u, 12u}) {
    for (std::size_t f = 0; f < fams.size(); ++f) {
      const AudioString a = fams[f].instantiate(n);
      EXPECT_EQ(table().classify(a), Classification(TransuranicElement{f, n}));
      int exotic = 0;
      for (const auto& p : sp.split_atoms(jhc(a)).atoms) {
        const Classification c = table().classify(p);
        if (std::holds_alternative<TransuranicElement>(c)) {
          ++exotic;
          EXPECT_EQ(std::get<TransuranicElement>(c).family, 1 - f);
          EXPECT_EQ(std::get<TransuranicElement>(c).n, n);
        } else {
          EXPECT_TRUE(std::holds_alternative<CommonElement>(c)) << p.to_literal();
        }
      }
      EXPECT_EQ(exotic, 1);
    }
  }
}

TEST(Transuranic, TemplateParsingAndMatching) {
  const auto t = TransuranicTemplate::parse("31221132221222112112322211*");
  EXPECT_EQ(t.hole_count(), 1u);
  EXPECT_EQ(t.instantiate(9), S("312211322212221121123222119"));
  EXPECT_EQ(t.match(S("31221132221222112112322211(11)")), 11u);
  EXPECT_FALSE(t.match(S("312211322212221121123222113")));
  EXPECT_THROW(TransuranicTemplate::parse("12x"), ParseError);
}

TEST(Classify, Examples) {
  EXPECT_TRUE(std::holds_alternative<CommonElement>(classify(S("22"), table())));
  EXPECT_TRUE(std::holds_alternative<Unstable>(classify(S("1"), table())));
  EXPECT_TRUE(table().is_stable(S("22")));
  EXPECT_FALSE(table().is_stable(S("1")));
}

TEST(DecayProducts, UnknownAtomsAreReported) {
  EXPECT_THROW(decay_products(Element{0, S("1"), {}}, table()), UnknownAtom);
}
