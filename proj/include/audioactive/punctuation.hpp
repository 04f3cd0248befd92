#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "audioactive/audio_string.hpp"

namespace audioactive {

// A female chunk starts on a (count, char) boundary; a male chunk starts with
// the char of a pair whose count lies outside the chunk.
enum class Sex { Female, Male };

std::string_view to_string(Sex sex) noexcept;

struct Pair {
  Digit count;
  Digit digit;

  friend bool operator==(const Pair&, const Pair&) = default;
};

struct PunctuatedChunk {
  std::optional<Digit> leading_char;    // male only
  std::vector<Pair> pairs;
  std::optional<Digit> trailing_count;  // char lies past the chunk

  // Flattens back to the digit sequence that was punctuated.
  AudioString reassemble() const;

  friend bool operator==(const PunctuatedChunk&, const PunctuatedChunk&) = default;
};

PunctuatedChunk punctuate(std::span<const Digit> s, Sex sex);
inline PunctuatedChunk punctuate(const AudioString& s, Sex sex) {
  return punctuate(s.view(), sex);
}

// A description never names the same char in two adjacent pairs; the leading
// dangling char counts as the char of the pair just before the chunk.
bool grammatically_correct(const PunctuatedChunk& p) noexcept;

// Same predicate without materializing the punctuation.
bool grammatically_correct(std::span<const Digit> s, Sex sex) noexcept;

struct ParentResult {
  AudioString known;          // digits forced by the child; may be empty
  bool truncated_right = false;  // child ended on a count whose char is unseen
};

// a1 a2 a3 a4 ... -> a2^a1 a4^a3 ...
ParentResult parent_of_girl(std::span<const Digit> s);
inline ParentResult parent_of_girl(const AudioString& s) {
  return parent_of_girl(s.view());
}

// a1 a2 a3 a4 a5 ... -> a1 a3^a2 a5^a4 ...
ParentResult parent_of_boy(std::span<const Digit> s);
inline ParentResult parent_of_boy(const AudioString& s) {
  return parent_of_boy(s.view());
}

inline ParentResult parent_of(std::span<const Digit> s, Sex sex) {
  return sex == Sex::Female ? parent_of_girl(s) : parent_of_boy(s);
}

}  // namespace audioactive
