#include "audioactive/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "audioactive/errors.hpp"

namespace audioactive {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& obj, const char* key) {
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

}  // namespace

std::string table_to_json(const PeriodicTable& t) {
  Json doc;
  doc["seed"] = t.seed().to_literal();
  Json elements = Json::array();
  for (const Element& e : t.elements()) {
    Json item;
    item["id"] = e.id;
    item["string"] = e.string.to_literal();
    item["products"] = e.products;
    elements.push_back(std::move(item));
  }
  doc["elements"] = std::move(elements);
  Json trans = Json::array();
  for (const auto& tt : t.transuranic()) {
    Json item;
    item["pattern"] = tt.to_string();
    trans.push_back(std::move(item));
  }
  doc["transuranic"] = std::move(trans);
  return doc.dump(2) + "\n";
}

PeriodicTable table_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  const auto seed = AudioString::parse(field<std::string>(doc, "seed"));
  std::vector<Element> elements;
  for (const Json& item : doc.at("elements")) {
    Element e;
    e.id = field<int>(item, "id");
    e.string = AudioString::parse(field<std::string>(item, "string"));
    e.products = field<std::vector<int>>(item, "products");
    elements.push_back(std::move(e));
  }
  std::vector<TransuranicTemplate> trans;
  if (doc.contains("transuranic")) {
    for (const Json& item : doc.at("transuranic")) {
      trans.push_back(TransuranicTemplate::parse(field<std::string>(item, "pattern")));
    }
  }
  try {
    PeriodicTable t(seed, std::move(elements), std::move(trans));
    if (!t.is_closed()) throw ParseError("table is not closed under decay");
    return t;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid table: ") + e.what());
  }
}

std::string certificate_to_json(const ProofCertificate& c) {
  Json doc;
  doc["L"] = c.depth;
  doc["capDays"] = c.cap_days;
  Json gens = Json::array();
  for (const auto& g : c.generations) {
    Json item;
    item["i"] = g.index;
    item["count"] = g.count;
    item["maxLongevity"] = g.max_longevity;
    gens.push_back(std::move(item));
  }
  doc["generations"] = std::move(gens);
  doc["haltedAt"] = c.halted_at;
  doc["M"] = c.max_longevity;
  doc["N"] = c.derived_n;
  doc["status"] = c.status == ProofStatus::Proven ? "PROVEN" : "NOT-PROVEN";
  return doc.dump(2) + "\n";
}

ProofCertificate certificate_from_json(std::string_view text) {
  const Json doc = parse_json(text);
  ProofCertificate c;
  c.depth = field<int>(doc, "L");
  c.cap_days = field<int>(doc, "capDays");
  for (const Json& item : doc.at("generations")) {
    c.generations.push_back({field<int>(item, "i"),
                             field<std::size_t>(item, "count"),
                             field<int>(item, "maxLongevity")});
  }
  c.halted_at = field<int>(doc, "haltedAt");
  c.max_longevity = field<int>(doc, "M");
  c.derived_n = field<int>(doc, "N");
  const auto status = field<std::string>(doc, "status");
  if (status == "PROVEN") {
    c.status = ProofStatus::Proven;
  } else if (status == "NOT-PROVEN") {
    c.status = ProofStatus::NotProven;
  } else {
    throw ParseError("unknown status '" + status + "'");
  }
  return c;
}

std::string abundances_csv(const PeriodicTable& t, const SpectralResult& r) {
  if (r.abundance.size() != t.size()) {
    throw std::invalid_argument("abundance vector does not match the table");
  }
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return r.abundance[a] > r.abundance[b];
  });
  std::ostringstream out;
  out << "id,string,abundance\n";
  char buf[64];
  for (const std::size_t i : order) {
    std::snprintf(buf, sizeof buf, "%.6f", r.abundance[i]);
    out << t.elements()[i].id << ',' << t.elements()[i].string.to_literal()
        << ',' << buf << '\n';
  }
  return out.str();
}

std::string char_poly_text(const BigPolynomial& p) {
  std::ostringstream out;
  out << "degree " << p.degree() << '\n';
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) out << *it << '\n';
  return out.str();
}

std::uint64_t content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : bytes) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::default_dir() {
  if (const char* d = std::getenv("AUDIOACTIVE_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) {
    return std::filesystem::path(d) / "audioactive";
  }
  if (const char* d = std::getenv("HOME"); d && *d) {
    return std::filesystem::path(d) / ".cache" / "audioactive";
  }
  return std::filesystem::temp_directory_path() / "audioactive";
}

std::filesystem::path TableCache::path_for(const AudioString& seed) const {
  std::string name = seed.to_literal();
  std::replace(name.begin(), name.end(), '(', '_');
  std::replace(name.begin(), name.end(), ')', '_');
  return dir_ / ("table-" + name + ".json");
}

// File layout: one header line "audioactive-table <seed> <hash>", then the
// table JSON exactly as table_to_json renders it.
PeriodicTable TableCache::load_or_derive(const AudioString& seed, bool* hit) {
  if (hit) *hit = false;
  std::ifstream in(path_for(seed), std::ios::binary);
  if (in) {
    std::string header;
    std::getline(in, header);
    std::ostringstream rest;
    rest << in.rdbuf();
    const std::string body = rest.str();
    std::istringstream hs(header);
    std::string magic, seed_literal, hash;
    hs >> magic >> seed_literal >> hash;
    if (magic == "audioactive-table" && seed_literal == seed.to_literal() &&
        hash == hex64(content_hash(body))) {
      try {
        PeriodicTable t = table_from_json(body);
        if (t.seed() == seed) {
          if (hit) *hit = true;
          return t;
        }
      } catch (const ParseError&) {
      }
    }
  }
  PeriodicTable t = derive_periodic_table(seed);
  store(t);
  return t;
}

void TableCache::store(const PeriodicTable& t) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const std::string body = table_to_json(t);
  const auto target = path_for(t.seed());
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << "audioactive-table " << t.seed().to_literal() << ' '
        << hex64(content_hash(body)) << '\n'
        << body;
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace audioactive
