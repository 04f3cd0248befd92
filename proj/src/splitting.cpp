#include "audioactive/splitting.hpp"

#include <algorithm>
#include <stdexcept>

#include "audioactive/errors.hpp"

namespace audioactive {

bool DigitSet::contains(Digit d) const noexcept {
  if (d < 64) return (mask_ >> d) & 1u;
  return std::binary_search(large_.begin(), large_.end(), d);
}

void DigitSet::insert(Digit d) {
  if (d < 64) {
    mask_ |= std::uint64_t{1} << d;
    return;
  }
  const auto it = std::lower_bound(large_.begin(), large_.end(), d);
  if (it == large_.end() || *it != d) large_.insert(it, d);
}

void DigitSet::merge(const DigitSet& other) {
  mask_ |= other.mask_;
  for (const Digit d : other.large_) insert(d);
}

std::vector<Digit> DigitSet::to_vector() const {
  std::vector<Digit> out;
  for (Digit d = 0; d < 64; ++d) {
    if ((mask_ >> d) & 1u) out.push_back(d);
  }
  out.insert(out.end(), large_.begin(), large_.end());
  return out;
}

AudioString SplitDecomposition::concat() const {
  AudioString out;
  for (const auto& a : atoms) out.append(a);
  return out;
}

Splitter::Splitter(SplitterOptions options) : options_(options) {
  if (options_.window < 2) throw std::invalid_argument("splitter window < 2");
}

Splitter::State Splitter::initial_state(std::span<const Digit> right,
                                        bool open) const {
  State s;
  if (!open && right.size() <= options_.window) {
    s.prefix.assign(right.begin(), right.end());
    s.whole = true;
  } else {
    s.prefix.assign(right.begin(),
                    right.begin() + std::min(right.size(), options_.window));
    s.whole = false;
  }
  return s;
}

bool Splitter::advance(State& state) {
  std::span<const Digit> exact = state.prefix;
  if (!state.whole) {
    // The last run may continue past the window; its count is unknown.
    std::size_t start = exact.size();
    while (start > 0 && exact[start - 1] == exact.back()) --start;
    exact = exact.first(start);
  }
  jhc_into(exact, scratch_);
  state.prefix.swap(scratch_);
  if (state.prefix.size() > options_.window) {
    state.prefix.resize(options_.window);
    state.whole = false;
  }
  return !state.prefix.empty();
}

void Splitter::encode(const State& state, std::string& key) {
  key.clear();
  key.push_back(state.whole ? 'w' : 'p');
  for (const Digit d : state.prefix) {
    if (d < 0xFF) {
      key.push_back(static_cast<char>(d));
    } else {
      key.push_back(static_cast<char>(0xFF));
      for (int b = 0; b < 4; ++b) {
        key.push_back(static_cast<char>((d >> (8 * b)) & 0xFF));
      }
    }
  }
}

std::optional<DigitSet> Splitter::trace(State state) {
  if (memo_.size() > options_.memo_limit) memo_.clear();

  std::vector<std::string> path;
  std::vector<Digit> firsts;
  std::unordered_map<std::string, std::size_t> seen;

  std::string key;
  DigitSet tail;
  bool exhausted = false;
  std::size_t resolved_from = 0;  // path[resolved_from..] already in memo_

  for (std::size_t step = 0;; ++step) {
    encode(state, key);
    if (const auto hit = memo_.find(key); hit != memo_.end()) {
      if (!hit->second) {
        exhausted = true;
      } else {
        tail = *hit->second;
      }
      resolved_from = path.size();
      break;
    }
    if (const auto rep = seen.find(key); rep != seen.end()) {
      // Cycle path[rep..]: every state on it sees exactly the cycle's digits.
      DigitSet cycle;
      for (std::size_t j = rep->second; j < path.size(); ++j) cycle.insert(firsts[j]);
      for (std::size_t j = rep->second; j < path.size(); ++j) memo_[path[j]] = cycle;
      tail = cycle;
      resolved_from = rep->second;
      break;
    }
    if (step >= options_.step_budget) {
      throw CycleNotFound("no descriptor repeat within " +
                          std::to_string(options_.step_budget) + " days");
    }
    seen.emplace(key, path.size());
    path.push_back(key);
    firsts.push_back(state.prefix.front());
    if (!advance(state)) {
      exhausted = true;
      resolved_from = path.size();
      break;
    }
  }

  for (std::size_t j = resolved_from; j-- > 0;) {
    if (exhausted) {
      memo_[path[j]] = std::nullopt;
    } else {
      tail.insert(firsts[j]);
      memo_[path[j]] = tail;
    }
  }
  if (exhausted) return std::nullopt;
  return tail;
}

DigitSet Splitter::first_digits(std::span<const Digit> right) {
  if (right.empty()) throw std::invalid_argument("first_digits of an empty string");
  auto digits = trace(initial_state(right, /*open=*/false));
  if (!digits) {
    throw CycleNotFound("exact prefix window exhausted for " +
                        AudioString(right).to_literal());
  }
  return *digits;
}

std::optional<DigitSet> Splitter::first_digits_open(
    std::span<const Digit> right) {
  if (right.empty()) throw std::invalid_argument("first_digits of an empty string");
  return trace(initial_state(right, /*open=*/true));
}

bool Splitter::splits_after(std::span<const Digit> left,
                            std::span<const Digit> right) {
  if (left.empty() || right.empty()) {
    throw std::invalid_argument("splits_after needs nonempty parts");
  }
  return !first_digits(right).contains(left.back());
}

std::vector<std::size_t> Splitter::cut_points(std::span<const Digit> s) {
  std::vector<std::size_t> cuts;
  for (std::size_t k = 1; k < s.size(); ++k) {
    // Equal neighbours merge into one run on the next day.
    if (s[k - 1] == s[k]) continue;
    if (!first_digits(s.subspan(k)).contains(s[k - 1])) cuts.push_back(k);
  }
  return cuts;
}

bool Splitter::is_chunk_atom(std::span<const Digit> s) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k - 1] == s[k]) continue;
    const auto digits = first_digits_open(s.subspan(k));
    if (digits && !digits->contains(s[k - 1])) return false;
  }
  return true;
}

bool Splitter::is_atom(std::span<const Digit> s) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k - 1] == s[k]) continue;
    if (!first_digits(s.subspan(k)).contains(s[k - 1])) return false;
  }
  return true;
}

SplitDecomposition Splitter::split_atoms(const AudioString& s) {
  if (s.empty()) throw std::invalid_argument("split_atoms of an empty string");
  SplitDecomposition d;
  std::size_t start = 0;
  for (const std::size_t k : cut_points(s.view())) {
    d.atoms.push_back(s.substr(start, k - start));
    start = k;
  }
  d.atoms.push_back(s.substr(start));
  return d;
}

Splitter& default_splitter() {
  thread_local Splitter splitter;
  return splitter;
}

bool splits_after(const AudioString& left, const AudioString& right) {
  return default_splitter().splits_after(left.view(), right.view());
}

SplitDecomposition split_atoms(const AudioString& s) {
  return default_splitter().split_atoms(s);
}

bool oracle_split_check(const AudioString& left, const AudioString& right,
                        std::size_t days) {
  if (left.empty() || right.empty()) {
    throw std::invalid_argument("oracle_split_check needs nonempty parts");
  }
  AudioString whole = left + right;
  AudioString l = left;
  AudioString r = right;
  for (std::size_t n = 0; n <= days; ++n) {
    if (whole != l + r) return false;
    if (n == days) break;
    whole = jhc(whole);
    l = jhc(l);
    r = jhc(r);
  }
  return true;
}

}  // namespace audioactive
