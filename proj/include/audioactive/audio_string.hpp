#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace audioactive {

// A symbol of an audioactive string. Values 1..3 are the standard alphabet;
// anything >= 4 is exotic. Zero is never a valid digit.
using Digit = std::uint32_t;

// Finite sequence of digits. Operations that need a nonempty string check it
// themselves; an empty AudioString is only produced as the known part of a
// degenerate parent computation.
class AudioString {
 public:
  using value_type = Digit;
  using const_iterator = std::vector<Digit>::const_iterator;

  AudioString() = default;
  AudioString(std::initializer_list<Digit> digits);
  explicit AudioString(std::vector<Digit> digits);
  AudioString(std::span<const Digit> digits);

  // Parses the digit literal format: 1-9 are single characters, any value
  // may be written "(n)". Throws ParseError.
  static AudioString parse(std::string_view literal);

  std::string to_literal() const;

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  Digit operator[](std::size_t i) const noexcept { return digits_[i]; }
  Digit front() const { return digits_.front(); }
  Digit back() const { return digits_.back(); }
  const_iterator begin() const noexcept { return digits_.begin(); }
  const_iterator end() const noexcept { return digits_.end(); }
  std::span<const Digit> view() const noexcept { return digits_; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }

  AudioString substr(std::size_t pos,
                     std::size_t count = std::string::npos) const;

  // True iff every digit lies in {1, 2, 3}.
  bool is_standard() const noexcept;

  void push_back(Digit d) { digits_.push_back(d); }
  void append(const AudioString& other);
  void append_run(Digit d, std::size_t count);

  friend AudioString operator+(AudioString lhs, const AudioString& rhs) {
    lhs.append(rhs);
    return lhs;
  }

  friend bool operator==(const AudioString&, const AudioString&) = default;
  friend auto operator<=>(const AudioString&, const AudioString&) = default;

 private:
  std::vector<Digit> digits_;
};

struct AudioStringHash {
  std::size_t operator()(const AudioString& s) const noexcept;
  std::size_t operator()(std::span<const Digit> s) const noexcept;
};

struct Run {
  Digit digit;
  std::size_t count;

  friend bool operator==(const Run&, const Run&) = default;
};

using RunEncoding = std::vector<Run>;

RunEncoding run_encode(std::span<const Digit> s);
inline RunEncoding run_encode(const AudioString& s) { return run_encode(s.view()); }

// Conway's look-and-say operator: every maximal run d^m becomes "m d".
AudioString jhc(std::span<const Digit> s);
inline AudioString jhc(const AudioString& s) { return jhc(s.view()); }

// Writes jhc(s) into out (cleared first); the allocation-free variant used on
// hot paths.
void jhc_into(std::span<const Digit> s, std::vector<Digit>& out);

inline constexpr std::size_t kDefaultLengthLimit = std::size_t{1} << 28;

// n-fold application of jhc. Throws ResourceCapExceeded if an intermediate
// term would exceed length_limit digits.
AudioString evolve(const AudioString& s, std::size_t days,
                   std::size_t length_limit = kDefaultLengthLimit);

std::size_t max_run_length(const AudioString& s);

}  // namespace audioactive

template <>
struct std::hash<audioactive::AudioString> {
  std::size_t operator()(const audioactive::AudioString& s) const noexcept {
    return audioactive::AudioStringHash{}(s);
  }
};
