#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "audioactive/audio_string.hpp"
#include "audioactive/punctuation.hpp"
#include "audioactive/splitting.hpp"
#include "audioactive/table.hpp"

namespace audioactive {

inline constexpr int kDefaultScreenDepth = 8;
inline constexpr int kDefaultCapDays = 50;
inline constexpr int kDefaultGenerationCap = 200;

struct LongevityResult {
  int days = 0;
  // Classification of every atom of the split string on day `days`, counted.
  std::map<Classification, std::uint64_t> final_compound;
};

// Days until a string decays into common and transuranic elements. Atoms
// evolve independently once split, so the answer is memoized per atom:
// days(atom) = 0 if the atom is classified, else 1 + max over its one-day
// products.
//
// Not thread-safe; give each worker its own instance.
class LongevityEngine {
 public:
  explicit LongevityEngine(const PeriodicTable& table,
                           SplitterOptions splitter_options = {});

  // Throws LongevityCapExceeded.
  int days(const AudioString& s, int cap_days);
  LongevityResult longevity(const AudioString& s, int cap_days);

  Splitter& splitter() noexcept { return splitter_; }
  const PeriodicTable& table() const noexcept { return *table_; }

 private:
  // Exact longevity of an atom, or nullopt if it exceeds `budget`.
  std::optional<int> atom_days(const AudioString& atom, int budget);

  const PeriodicTable* table_;
  Splitter splitter_;
  std::unordered_map<AudioString, int> exact_;
  // Atoms known to need more than the recorded number of days.
  std::unordered_map<AudioString, int> exceeds_;
};

LongevityResult longevity(const AudioString& s, const PeriodicTable& t,
                          int cap_days);

// Genealogical screening: can `chunk`, read with the given sex, sit inside a
// string that is depth + 1 days old? The chunk and its ancestors up to
// `depth` generations back must each admit a grammatical punctuation, where
// each ascent applies the parent operator matching the punctuation used and
// both sexes are tried for every ancestor. Meeting an ancestor (or the chunk
// itself) of at most two digits accepts the whole chain.
bool screen(std::span<const Digit> chunk, Sex sex, int depth);
inline bool screen(const AudioString& chunk, Sex sex, int depth) {
  return screen(chunk.view(), sex, depth);
}

// The fifteen one-digit extensions of w, in order:
// c.w for c = 1..3, w.c for c = 1..3, then c.w.d for c, d = 1..3.
std::vector<AudioString> extensions(const AudioString& w);

// The nine endings appended in each generation, in listing order.
inline constexpr std::array<std::array<Digit, 2>, 9> kEndings{{
    {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}};

struct GenerationSet {
  int index = 0;  // members have length 2 * index
  std::vector<AudioString> members;  // sorted, distinct
};

struct GenerationRecord {
  int index = 0;
  std::size_t count = 0;
  int max_longevity = 0;  // running maximum after this generation

  friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

struct CosmoOptions {
  int depth = kDefaultScreenDepth;  // L
  int cap_days = kDefaultCapDays;
  int generation_cap = kDefaultGenerationCap;
  // Worker threads for candidate filtering; results do not depend on it.
  unsigned threads = 1;
  SplitterOptions splitter{};
};

// One step of the search: survivors of generation i-1 times the nine endings,
// kept if no cut of the candidate splits regardless of what follows it
// (Splitter::is_chunk_atom) and it passes screening. Longevity of
// each inductee and its fifteen extensions is folded into the returned
// maximum. Generation 0 is the single empty prefix.
struct GenerationStep {
  GenerationSet next;
  int max_longevity = 0;  // over this generation's inductees only
};

class CosmoSearch {
 public:
  CosmoSearch(const PeriodicTable& table, CosmoOptions options);
  ~CosmoSearch();

  // Throws LongevityCapExceeded naming the offending string.
  GenerationStep next_generation(const GenerationSet& prev);

  const CosmoOptions& options() const noexcept { return options_; }

 private:
  struct Worker;
  const PeriodicTable* table_;
  CosmoOptions options_;
  std::vector<std::unique_ptr<Worker>> workers_;
};

enum class ProofStatus { Proven, NotProven };

struct ProofCertificate {
  int depth = 0;  // L
  int cap_days = 0;
  std::vector<GenerationRecord> generations;
  int halted_at = 0;      // first index with an empty generation, 0 if none
  int max_longevity = 0;  // M
  int derived_n = 0;      // M + L + 1
  ProofStatus status = ProofStatus::NotProven;

  // Length bound on atoms of mature strings implied by the halt.
  int atom_length_bound() const noexcept { return 2 * halted_at; }

  // Throws NonHalting unless status is Proven.
  void require_proven() const;
};

using GenerationCallback = std::function<void(const GenerationRecord&)>;

// Iterates next_generation from i = 1 until a generation is empty. If
// generation_cap is reached first the certificate comes back NotProven rather
// than as an exception; require_proven() turns that into NonHalting.
// Throws LongevityCapExceeded.
ProofCertificate cosmo(const PeriodicTable& table, const CosmoOptions& options,
                       const GenerationCallback& on_generation = {});

}  // namespace audioactive
