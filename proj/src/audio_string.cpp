#include "audioactive/audio_string.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "audioactive/errors.hpp"

namespace audioactive {

AudioString::AudioString(std::initializer_list<Digit> digits)
    : digits_(digits) {}

AudioString::AudioString(std::vector<Digit> digits)
    : digits_(std::move(digits)) {}

AudioString::AudioString(std::span<const Digit> digits)
    : digits_(digits.begin(), digits.end()) {}

AudioString AudioString::parse(std::string_view literal) {
  std::vector<Digit> out;
  out.reserve(literal.size());
  std::size_t i = 0;
  while (i < literal.size()) {
    const char c = literal[i];
    if (c >= '1' && c <= '9') {
      out.push_back(static_cast<Digit>(c - '0'));
      ++i;
      continue;
    }
    if (c == '(') {
      const auto close = literal.find(')', i + 1);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated '(' in literal \"" +
                         std::string(literal) + "\"");
      }
      const auto body = literal.substr(i + 1, close - i - 1);
      std::uint64_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(body.data(), body.data() + body.size(), value);
      if (body.empty() || ec != std::errc{} ||
          ptr != body.data() + body.size() || value == 0 ||
          value > std::numeric_limits<Digit>::max()) {
        throw ParseError("bad digit \"(" + std::string(body) +
                         ")\" in literal \"" + std::string(literal) + "\"");
      }
      out.push_back(static_cast<Digit>(value));
      i = close + 1;
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) +
                     "' in literal \"" + std::string(literal) + "\"");
  }
  if (out.empty()) throw ParseError("empty digit literal");
  return AudioString(std::move(out));
}

std::string AudioString::to_literal() const {
  std::string out;
  out.reserve(digits_.size());
  for (const Digit d : digits_) {
    if (d >= 1 && d <= 9) {
      out.push_back(static_cast<char>('0' + d));
    } else {
      out.push_back('(');
      out += std::to_string(d);
      out.push_back(')');
    }
  }
  return out;
}

AudioString AudioString::substr(std::size_t pos, std::size_t count) const {
  if (pos > digits_.size()) throw std::out_of_range("AudioString::substr");
  const std::size_t n = std::min(count, digits_.size() - pos);
  return AudioString(std::span<const Digit>(digits_).subspan(pos, n));
}

bool AudioString::is_standard() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(),
                     [](Digit d) { return d >= 1 && d <= 3; });
}

void AudioString::append(const AudioString& other) {
  digits_.insert(digits_.end(), other.digits_.begin(), other.digits_.end());
}

void AudioString::append_run(Digit d, std::size_t count) {
  digits_.insert(digits_.end(), count, d);
}

std::size_t AudioStringHash::operator()(
    std::span<const Digit> s) const noexcept {
  // FNV-1a over the digit values.
  std::uint64_t h = 14695981039346656037ull;
  for (const Digit d : s) {
    h ^= d;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::size_t AudioStringHash::operator()(const AudioString& s) const noexcept {
  return (*this)(s.view());
}

RunEncoding run_encode(std::span<const Digit> s) {
  RunEncoding runs;
  for (const Digit d : s) {
    if (!runs.empty() && runs.back().digit == d) {
      ++runs.back().count;
    } else {
      runs.push_back({d, 1});
    }
  }
  return runs;
}

void jhc_into(std::span<const Digit> s, std::vector<Digit>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i + 1;
    while (j < s.size() && s[j] == s[i]) ++j;
    const std::size_t count = j - i;
    if (count > std::numeric_limits<Digit>::max()) {
      throw ResourceCapExceeded("run of length " + std::to_string(count) +
                                " does not fit in a digit");
    }
    out.push_back(static_cast<Digit>(count));
    out.push_back(s[i]);
    i = j;
  }
}

AudioString jhc(std::span<const Digit> s) {
  if (s.empty()) throw std::invalid_argument("jhc of an empty string");
  std::vector<Digit> out;
  out.reserve(2 * s.size());
  jhc_into(s, out);
  return AudioString(std::move(out));
}

AudioString evolve(const AudioString& s, std::size_t days,
                   std::size_t length_limit) {
  if (s.empty()) throw std::invalid_argument("evolve of an empty string");
  std::vector<Digit> current = s.digits();
  std::vector<Digit> next;
  for (std::size_t day = 0; day < days; ++day) {
    // The string can at most double in one step.
    if (2 * current.size() > length_limit) {
      const auto runs = run_encode(current).size();
      if (2 * runs > length_limit) {
        throw ResourceCapExceeded("evolve: day " + std::to_string(day + 1) +
                                  " would have " + std::to_string(2 * runs) +
                                  " digits, limit is " +
                                  std::to_string(length_limit));
      }
    }
    jhc_into(current, next);
    if (next == current) break;  // fixed point ("22")
    current.swap(next);
  }
  return AudioString(std::move(current));
}

std::size_t max_run_length(const AudioString& s) {
  if (s.empty()) throw std::invalid_argument("max_run_length of an empty string");
  std::size_t best = 0;
  for (const Run& r : run_encode(s)) best = std::max(best, r.count);
  return best;
}

}  // namespace audioactive
