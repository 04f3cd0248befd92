#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "audioactive/audio_string.hpp"

namespace audioactive {

// Set of digits; dense bitmask for the common small values, sorted spill
// vector for anything >= 64.
class DigitSet {
 public:
  bool contains(Digit d) const noexcept;
  void insert(Digit d);
  void merge(const DigitSet& other);
  std::vector<Digit> to_vector() const;

  friend bool operator==(const DigitSet&, const DigitSet&) = default;

 private:
  std::uint64_t mask_ = 0;
  std::vector<Digit> large_;
};

struct SplitDecomposition {
  std::vector<AudioString> atoms;

  AudioString concat() const;
};

struct SplitterOptions {
  // Length of the exact prefix kept while iterating the right part.
  std::size_t window = 64;
  // Maximum number of days simulated before a descriptor repeat must occur.
  std::size_t step_budget = 1000;
  // The memo is dropped wholesale when it grows past this many states.
  std::size_t memo_limit = std::size_t{1} << 21;
};

// Decides L.R splits exactly. The last digit of L never changes under
// evolution, so L.R splits iff the first digit of evolve(R, n) never equals
// last(L). That first digit is read off an exact prefix of evolve(R, n):
// while R's image is short it is kept whole; once it is longer than the
// window only a prefix is kept, and a prefix minus its last (possibly
// incomplete) run maps to an exact prefix of the next day. The (prefix, whole)
// state is therefore a finite descriptor, and iteration stops on the first
// repeat.
//
// Not thread-safe: the memo is per instance. Use one Splitter per thread.
class Splitter {
 public:
  explicit Splitter(SplitterOptions options = {});

  // Every digit that is ever the first digit of evolve(right, n), n >= 0.
  // Throws CycleNotFound.
  DigitSet first_digits(std::span<const Digit> right);

  bool splits_after(std::span<const Digit> left, std::span<const Digit> right);

  // Positions k (1 <= k < |s|) such that s splits as s[0..k) . s[k..).
  std::vector<std::size_t> cut_points(std::span<const Digit> s);

  // First digits of evolve(right . x, n) that hold for every continuation x
  // (including none); nullopt if they depend on the continuation.
  std::optional<DigitSet> first_digits_open(std::span<const Digit> right);

  bool is_atom(std::span<const Digit> s);

  // True iff no cut of s splits whatever follows s: s can be a factor of a
  // longer non-splittable string.
  bool is_chunk_atom(std::span<const Digit> s);

  SplitDecomposition split_atoms(const AudioString& s);

  std::size_t memo_size() const noexcept { return memo_.size(); }
  const SplitterOptions& options() const noexcept { return options_; }

 private:
  struct State {
    std::vector<Digit> prefix;
    bool whole = true;
  };

  State initial_state(std::span<const Digit> right, bool open) const;
  // False once the exact prefix is used up.
  bool advance(State& state);
  // First digits along the trajectory of `state`; nullopt if the exact prefix
  // runs out before a repeat.
  std::optional<DigitSet> trace(State state);
  static void encode(const State& state, std::string& key);

  SplitterOptions options_;
  std::unordered_map<std::string, std::optional<DigitSet>> memo_;
  std::vector<Digit> scratch_;
};

// Per-thread default splitter with default options.
Splitter& default_splitter();

bool splits_after(const AudioString& left, const AudioString& right);
SplitDecomposition split_atoms(const AudioString& s);

// Brute-force reference: evolve(left.right, n) == evolve(left, n).evolve(right, n)
// for every n <= days. Only meant as an independent check of splits_after.
bool oracle_split_check(const AudioString& left, const AudioString& right,
                        std::size_t days);

}  // namespace audioactive
