#include "audioactive/table.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "audioactive/errors.hpp"

namespace audioactive {

TransuranicTemplate::TransuranicTemplate(const AudioString& atom, Digit exotic)
    : pattern_(atom.digits()) {
  for (Digit& d : pattern_) {
    if (d == exotic) d = kHole;
  }
}

TransuranicTemplate TransuranicTemplate::parse(std::string_view pattern) {
  TransuranicTemplate t;
  std::size_t start = 0;
  while (start <= pattern.size()) {
    const auto star = pattern.find('*', start);
    const auto piece = pattern.substr(start, star == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : star - start);
    if (!piece.empty()) {
      const auto digits = AudioString::parse(piece);
      t.pattern_.insert(t.pattern_.end(), digits.begin(), digits.end());
    }
    if (star == std::string_view::npos) break;
    t.pattern_.push_back(kHole);
    start = star + 1;
  }
  if (t.pattern_.empty()) throw ParseError("empty transuranic pattern");
  return t;
}

std::size_t TransuranicTemplate::hole_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(pattern_.begin(), pattern_.end(), kHole));
}

AudioString TransuranicTemplate::instantiate(Digit n) const {
  std::vector<Digit> out = pattern_;
  for (Digit& d : out) {
    if (d == kHole) d = n;
  }
  return AudioString(std::move(out));
}

std::optional<Digit> TransuranicTemplate::match(
    const AudioString& s) const noexcept {
  if (s.size() != pattern_.size()) return std::nullopt;
  std::optional<Digit> n;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (pattern_[i] == kHole) {
      if (s[i] < 4 || (n && *n != s[i])) return std::nullopt;
      n = s[i];
    } else if (pattern_[i] != s[i]) {
      return std::nullopt;
    }
  }
  return n;
}

std::string TransuranicTemplate::to_string() const {
  std::string out;
  for (const Digit d : pattern_) {
    out += d == kHole ? std::string("*") : AudioString{d}.to_literal();
  }
  return out;
}

std::string to_string(const Classification& c) {
  struct Visitor {
    std::string operator()(const CommonElement& e) const {
      return "common:" + std::to_string(e.id);
    }
    std::string operator()(const TransuranicElement& e) const {
      return "transuranic:" + std::to_string(e.family) + ":" +
             std::to_string(e.n);
    }
    std::string operator()(const Unstable&) const { return "unstable"; }
  };
  return std::visit(Visitor{}, c);
}

PeriodicTable::PeriodicTable(AudioString seed, std::vector<Element> elements,
                             std::vector<TransuranicTemplate> transuranic)
    : seed_(std::move(seed)),
      elements_(std::move(elements)),
      transuranic_(std::move(transuranic)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Element& e = elements_[i];
    if (e.id != static_cast<ElementId>(i + 1)) {
      throw std::invalid_argument("element ids must be dense from 1");
    }
    if (i > 0 && !(elements_[i - 1].string < e.string)) {
      throw std::invalid_argument("elements must be sorted by string");
    }
    index_.emplace(e.string, e.id);
  }
}

std::optional<ElementId> PeriodicTable::find(const AudioString& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Classification PeriodicTable::classify(const AudioString& atom) const {
  if (const auto id = find(atom)) return CommonElement{*id};
  for (std::size_t f = 0; f < transuranic_.size(); ++f) {
    if (const auto n = transuranic_[f].match(atom)) {
      return TransuranicElement{f, *n};
    }
  }
  return Unstable{};
}

bool PeriodicTable::is_stable(const AudioString& atom) const {
  return !std::holds_alternative<Unstable>(classify(atom));
}

bool PeriodicTable::is_closed() const noexcept {
  const auto n = static_cast<ElementId>(elements_.size());
  for (const Element& e : elements_) {
    for (const ElementId p : e.products) {
      if (p < 1 || p > n) return false;
    }
  }
  return true;
}

PeriodicTable derive_common_elements(const AudioString& seed,
                                     const DerivationOptions& options) {
  if (seed.empty()) throw std::invalid_argument("empty seed");
  if (!seed.is_standard()) {
    throw std::invalid_argument("seed must be over {1,2,3}: " + seed.to_literal());
  }
  Splitter& splitter = default_splitter();

  // Decay graph over every atom reachable from the seed.
  std::map<AudioString, std::vector<AudioString>> decay;
  std::deque<AudioString> pending;
  for (auto& a : splitter.split_atoms(seed).atoms) pending.push_back(std::move(a));
  while (!pending.empty()) {
    AudioString atom = std::move(pending.front());
    pending.pop_front();
    if (decay.contains(atom)) continue;
    auto products = splitter.split_atoms(jhc(atom)).atoms;
    for (const auto& p : products) {
      if (!decay.contains(p)) pending.push_back(p);
    }
    decay.emplace(std::move(atom), std::move(products));
    if (decay.size() > options.atom_cap) {
      throw NoClosure("decay closure of " + seed.to_literal() + " exceeds " +
                      std::to_string(options.atom_cap) + " atoms");
    }
  }

  // Peel off atoms nobody in the remaining set decays into.
  std::map<AudioString, std::size_t> in_degree;
  for (const auto& [atom, products] : decay) in_degree.try_emplace(atom, 0);
  for (const auto& [atom, products] : decay) {
    for (const auto& p : products) ++in_degree[p];
  }
  std::set<AudioString> core;
  std::deque<AudioString> orphans;
  for (const auto& [atom, deg] : in_degree) {
    core.insert(atom);
    if (deg == 0) orphans.push_back(atom);
  }
  while (!orphans.empty()) {
    const AudioString atom = std::move(orphans.front());
    orphans.pop_front();
    core.erase(atom);
    for (const auto& p : decay.at(atom)) {
      if (--in_degree[p] == 0) orphans.push_back(p);
    }
  }

  std::map<AudioString, ElementId> ids;
  for (const auto& atom : core) {
    ids.emplace(atom, static_cast<ElementId>(ids.size() + 1));
  }
  std::vector<Element> elements;
  elements.reserve(core.size());
  for (const auto& [atom, id] : ids) {
    Element e{id, atom, {}};
    for (const auto& p : decay.at(atom)) e.products.push_back(ids.at(p));
    elements.push_back(std::move(e));
  }
  return PeriodicTable(seed, std::move(elements));
}

std::vector<TransuranicTemplate> derive_transuranic(
    Digit n, const DerivationOptions& options) {
  if (n < 4) throw std::invalid_argument("transuranic digit must be >= 4");
  Splitter& splitter = default_splitter();
  const auto carrier = [n](const AudioString& a) {
    return std::find(a.begin(), a.end(), n) != a.end();
  };

  std::vector<AudioString> trail{AudioString{n}};
  for (std::size_t day = 0; day < options.transuranic_day_cap; ++day) {
    const auto atoms = splitter.split_atoms(jhc(trail.back())).atoms;
    const auto it = std::find_if(atoms.begin(), atoms.end(), carrier);
    if (it == atoms.end() ||
        std::find_if(std::next(it), atoms.end(), carrier) != atoms.end()) {
      throw NoCycle("exotic digit " + std::to_string(n) +
                    " is not carried by exactly one atom");
    }
    const auto seen = std::find(trail.begin(), trail.end(), *it);
    if (seen != trail.end()) {
      std::vector<TransuranicTemplate> family;
      for (auto a = seen; a != trail.end(); ++a) {
        family.emplace_back(*a, n);
        if (family.back().hole_count() != 1) {
          throw NoCycle("transuranic atom " + a->to_literal() +
                        " carries the exotic digit more than once");
        }
      }
      std::sort(family.begin(), family.end());
      return family;
    }
    trail.push_back(*it);
  }
  throw NoCycle("exotic digit " + std::to_string(n) + " did not cycle within " +
                std::to_string(options.transuranic_day_cap) + " days");
}

PeriodicTable derive_periodic_table(const AudioString& seed,
                                    const DerivationOptions& options) {
  PeriodicTable t = derive_common_elements(seed, options);
  t.set_transuranic(derive_transuranic(4, options));
  return t;
}

std::vector<ElementId> decay_products(const Element& e, const PeriodicTable& t) {
  std::vector<ElementId> ids;
  for (const auto& atom : default_splitter().split_atoms(jhc(e.string)).atoms) {
    const auto id = t.find(atom);
    if (!id) {
      throw UnknownAtom("decay of " + e.string.to_literal() +
                        " produces unknown atom " + atom.to_literal());
    }
    ids.push_back(*id);
  }
  return ids;
}

}  // namespace audioactive
