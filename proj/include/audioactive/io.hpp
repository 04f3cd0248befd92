#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "audioactive/cosmology.hpp"
#include "audioactive/spectral.hpp"
#include "audioactive/table.hpp"

namespace audioactive {

// {"seed", "elements": [{"id", "string", "products"}], "transuranic":
// [{"pattern"}]}, two-space indent, trailing newline.
std::string table_to_json(const PeriodicTable& t);
// Throws ParseError on malformed documents or tables that fail validation.
PeriodicTable table_from_json(std::string_view text);

// {"L", "capDays", "generations": [{"i", "count", "maxLongevity"}],
// "haltedAt", "M", "N", "status"}.
std::string certificate_to_json(const ProofCertificate& c);
ProofCertificate certificate_from_json(std::string_view text);

// Header "id,string,abundance", then one row per element by decreasing
// abundance (ties by id).
std::string abundances_csv(const PeriodicTable& t, const SpectralResult& r);

// "degree n", then the coefficients of x^n down to x^0, one per line.
std::string char_poly_text(const BigPolynomial& p);

// 64-bit FNV-1a.
std::uint64_t content_hash(std::string_view bytes);

// Derived tables stored as JSON under a directory, one file per seed. A file
// is used only if its seed matches and the hash recorded next to it matches
// the table text; anything else is re-derived and overwritten.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  // $AUDIOACTIVE_CACHE_DIR, else $XDG_CACHE_HOME/audioactive, else
  // ~/.cache/audioactive, else a directory under the system temp path.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const AudioString& seed) const;

  // Write failures are ignored; the table is still returned.
  PeriodicTable load_or_derive(const AudioString& seed, bool* hit = nullptr);

  void store(const PeriodicTable& t) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace audioactive
