#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "audioactive/audio_string.hpp"
#include "audioactive/splitting.hpp"

namespace audioactive {

using ElementId = int;

struct Element {
  ElementId id = 0;
  AudioString string;
  std::vector<ElementId> products;  // one-day decay, left to right
};

// A transuranic family member with its exotic digit abstracted away. The hole
// is stored as digit 0 and rendered as '*'.
class TransuranicTemplate {
 public:
  static constexpr Digit kHole = 0;

  TransuranicTemplate() = default;
  // Replaces every occurrence of `exotic` in `atom` by the hole.
  TransuranicTemplate(const AudioString& atom, Digit exotic);

  static TransuranicTemplate parse(std::string_view pattern);

  const std::vector<Digit>& pattern() const noexcept { return pattern_; }
  std::size_t hole_count() const noexcept;
  AudioString instantiate(Digit n) const;
  // The exotic digit if `s` is an instance of this template.
  std::optional<Digit> match(const AudioString& s) const noexcept;
  std::string to_string() const;

  friend bool operator==(const TransuranicTemplate&,
                         const TransuranicTemplate&) = default;
  friend auto operator<=>(const TransuranicTemplate&,
                          const TransuranicTemplate&) = default;

 private:
  std::vector<Digit> pattern_;
};

struct CommonElement {
  ElementId id;
  friend auto operator<=>(const CommonElement&, const CommonElement&) = default;
};

struct TransuranicElement {
  std::size_t family;  // index into PeriodicTable::transuranic()
  Digit n;
  friend auto operator<=>(const TransuranicElement&,
                          const TransuranicElement&) = default;
};

struct Unstable {
  friend auto operator<=>(const Unstable&, const Unstable&) = default;
};

using Classification = std::variant<CommonElement, TransuranicElement, Unstable>;

std::string to_string(const Classification& c);

class PeriodicTable {
 public:
  PeriodicTable() = default;
  // Elements must carry dense ids 1..n in lexicographic order of string.
  PeriodicTable(AudioString seed, std::vector<Element> elements,
                std::vector<TransuranicTemplate> transuranic = {});

  const AudioString& seed() const noexcept { return seed_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::vector<TransuranicTemplate>& transuranic() const noexcept {
    return transuranic_;
  }
  std::size_t size() const noexcept { return elements_.size(); }

  const Element& element(ElementId id) const { return elements_.at(id - 1); }
  std::optional<ElementId> find(const AudioString& s) const;

  Classification classify(const AudioString& atom) const;
  bool is_stable(const AudioString& atom) const;

  void set_transuranic(std::vector<TransuranicTemplate> templates) {
    transuranic_ = std::move(templates);
  }

  // Every product id of every element is an element of the table.
  bool is_closed() const noexcept;

 private:
  AudioString seed_;
  std::vector<Element> elements_;
  std::vector<TransuranicTemplate> transuranic_;
  std::unordered_map<AudioString, ElementId> index_;
};

struct DerivationOptions {
  std::size_t atom_cap = 10000;
  std::size_t transuranic_day_cap = 100;
};

// Closes the seed's atoms under one-day decay, then keeps the recurrent core:
// atoms that still have a parent after every atom without one has been
// discarded (repeatedly). Throws NoClosure.
PeriodicTable derive_common_elements(const AudioString& seed,
                                     const DerivationOptions& options = {});

// Follows the atom that carries the exotic digit n (n >= 4) through the daily
// splittings of "n" until it cycles. Throws NoCycle.
std::vector<TransuranicTemplate> derive_transuranic(
    Digit n, const DerivationOptions& options = {});

// Common elements plus the transuranic families abstracted from n = 4.
PeriodicTable derive_periodic_table(const AudioString& seed,
                                    const DerivationOptions& options = {});

inline Classification classify(const AudioString& a, const PeriodicTable& t) {
  return t.classify(a);
}

// split_atoms(jhc(e.string)) mapped to element ids. Throws UnknownAtom.
std::vector<ElementId> decay_products(const Element& e, const PeriodicTable& t);

}  // namespace audioactive
