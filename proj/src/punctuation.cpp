#include "audioactive/punctuation.hpp"

#include <stdexcept>

namespace audioactive {

std::string_view to_string(Sex sex) noexcept {
  return sex == Sex::Female ? "female" : "male";
}

AudioString PunctuatedChunk::reassemble() const {
  AudioString out;
  if (leading_char) out.push_back(*leading_char);
  for (const Pair& p : pairs) {
    out.push_back(p.count);
    out.push_back(p.digit);
  }
  if (trailing_count) out.push_back(*trailing_count);
  return out;
}

PunctuatedChunk punctuate(std::span<const Digit> s, Sex sex) {
  if (s.empty()) throw std::invalid_argument("punctuate of an empty string");
  PunctuatedChunk p;
  std::size_t i = 0;
  if (sex == Sex::Male) p.leading_char = s[i++];
  for (; i + 1 < s.size(); i += 2) p.pairs.push_back({s[i], s[i + 1]});
  if (i < s.size()) p.trailing_count = s[i];
  return p;
}

bool grammatically_correct(const PunctuatedChunk& p) noexcept {
  std::optional<Digit> previous = p.leading_char;
  for (const Pair& pair : p.pairs) {
    if (previous && *previous == pair.digit) return false;
    previous = pair.digit;
  }
  return true;
}

bool grammatically_correct(std::span<const Digit> s, Sex sex) noexcept {
  // Described chars sit at odd offsets (female) or even offsets (male).
  std::size_t i = sex == Sex::Female ? 1 : 0;
  for (; i + 2 < s.size(); i += 2) {
    if (s[i] == s[i + 2]) return false;
  }
  return true;
}

ParentResult parent_of_girl(std::span<const Digit> s) {
  if (s.empty()) throw std::invalid_argument("parent_of_girl of an empty string");
  ParentResult r;
  std::size_t i = 0;
  for (; i + 1 < s.size(); i += 2) r.known.append_run(s[i + 1], s[i]);
  r.truncated_right = i < s.size();
  return r;
}

ParentResult parent_of_boy(std::span<const Digit> s) {
  if (s.empty()) throw std::invalid_argument("parent_of_boy of an empty string");
  ParentResult r;
  r.known.push_back(s[0]);
  std::size_t i = 1;
  for (; i + 1 < s.size(); i += 2) r.known.append_run(s[i + 1], s[i]);
  r.truncated_right = i < s.size();
  return r;
}

}  // namespace audioactive
