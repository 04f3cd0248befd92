#include "audioactive/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "audioactive/errors.hpp"
#include "audioactive/io.hpp"
#include "audioactive/spectral.hpp"
#include "audioactive/splitting.hpp"

namespace audioactive::cli {

using Json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format pick(const RunConfig& cfg, Format fallback,
            std::initializer_list<Format> allowed) {
  const Format f = cfg.format.value_or(fallback);
  for (const Format a : allowed) {
    if (a == f) return f;
  }
  throw UsageError("output format not supported by this command");
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open " + cfg.out + " for writing");
  file << text;
  if (!file) throw UsageError("failed writing " + cfg.out);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

PeriodicTable load_table(const RunConfig& cfg) {
  TableCache cache(TableCache::default_dir());
  return cache.load_or_derive(AudioString::parse(cfg.seed));
}

}  // namespace

int cmd_say(const std::string& literal, std::size_t days, const RunConfig& cfg,
            std::ostream& out) {
  const Format f = pick(cfg, Format::Text, {Format::Text, Format::Csv, Format::Json});
  std::vector<AudioString> terms{AudioString::parse(literal)};
  if (terms.front().empty()) throw ParseError("empty literal");
  for (std::size_t i = 0; i < days; ++i) terms.push_back(evolve(terms.back(), 1));

  const auto ratio = [&](std::size_t i) {
    return static_cast<double>(terms[i].size()) /
           static_cast<double>(terms[i - 1].size());
  };
  std::ostringstream s;
  if (f == Format::Json) {
    Json doc;
    doc["terms"] = Json::array();
    doc["lengths"] = Json::array();
    doc["ratios"] = Json::array();
    for (std::size_t i = 0; i < terms.size(); ++i) {
      doc["terms"].push_back(terms[i].to_literal());
      doc["lengths"].push_back(terms[i].size());
      if (i > 0) doc["ratios"].push_back(ratio(i));
    }
    s << doc.dump(2) << '\n';
  } else if (f == Format::Csv) {
    s << "i,length,ratio\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      s << i << ',' << terms[i].size() << ',' << (i ? fixed(ratio(i), 9) : "")
        << '\n';
    }
  } else {
    s << "# i length ratio\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      s << "# " << i << ' ' << terms[i].size() << ' '
        << (i ? fixed(ratio(i), 9) : "-") << '\n';
    }
    for (const auto& t : terms) s << t.to_literal() << '\n';
  }
  emit(cfg, out, s.str());
  return kExitOk;
}

int cmd_split(const std::string& literal, const RunConfig& cfg, std::ostream& out) {
  pick(cfg, Format::Json, {Format::Json});
  const AudioString s = AudioString::parse(literal);
  if (s.empty()) throw ParseError("empty literal");
  Json atoms = Json::array();
  for (const auto& a : split_atoms(s).atoms) atoms.push_back(a.to_literal());
  emit(cfg, out, atoms.dump() + "\n");
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  pick(cfg, Format::Json, {Format::Json});
  emit(cfg, out, table_to_json(load_table(cfg)));
  return kExitOk;
}

int cmd_lambda(const RunConfig& cfg, bool charpoly, std::ostream& out) {
  const Format f = pick(cfg, Format::Text, {Format::Text, Format::Json});
  const PeriodicTable t = load_table(cfg);
  const DecayMatrix m = decay_matrix(t);
  if (charpoly) {
    const BigPolynomial p = char_poly(m);
    if (f == Format::Json) {
      Json doc;
      doc["degree"] = p.degree();
      doc["coefficients"] = Json::array();
      const auto& c = p.coefficients();
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        doc["coefficients"].push_back(it->str());
      }
      emit(cfg, out, doc.dump(2) + "\n");
    } else {
      emit(cfg, out, char_poly_text(p));
    }
    return kExitOk;
  }
  const SpectralResult r = dominant_eigenvalue(m);
  if (f == Format::Json) {
    Json doc;
    doc["lambda"] = r.lambda;
    doc["residual"] = r.residual;
    doc["iterations"] = r.iterations;
    doc["elements"] = t.size();
    emit(cfg, out, doc.dump(2) + "\n");
  } else {
    emit(cfg, out, fixed(r.lambda, 12) + "\n");
  }
  return kExitOk;
}

int cmd_abundance(const RunConfig& cfg, std::ostream& out) {
  const Format f = pick(cfg, Format::Csv, {Format::Csv, Format::Json});
  const PeriodicTable t = load_table(cfg);
  const SpectralResult r = dominant_eigenvalue(decay_matrix(t));
  if (f == Format::Csv) {
    emit(cfg, out, abundances_csv(t, r));
    return kExitOk;
  }
  Json doc;
  doc["normalization"] = "dominant left eigenvector, atoms per million atoms";
  doc["lambda"] = r.lambda;
  doc["abundances"] = Json::array();
  std::vector<std::size_t> order(t.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return r.abundance[a] > r.abundance[b];
  });
  for (const std::size_t i : order) {
    Json item;
    item["id"] = t.elements()[i].id;
    item["string"] = t.elements()[i].string.to_literal();
    item["abundance"] = r.abundance[i];
    doc["abundances"].push_back(std::move(item));
  }
  emit(cfg, out, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_longevity(const std::string& literal, const RunConfig& cfg,
                  std::ostream& out) {
  const Format f = pick(cfg, Format::Text, {Format::Text, Format::Json});
  const AudioString s = AudioString::parse(literal);
  if (s.empty()) throw ParseError("empty literal");
  const PeriodicTable t = load_table(cfg);
  const LongevityResult r = longevity(s, t, cfg.cap_days);
  if (f == Format::Text) {
    emit(cfg, out, std::to_string(r.days) + "\n");
    return kExitOk;
  }
  Json doc;
  doc["string"] = s.to_literal();
  doc["days"] = r.days;
  doc["capDays"] = cfg.cap_days;
  doc["compound"] = Json::array();
  for (const auto& [c, count] : r.final_compound) {
    Json item;
    item["class"] = to_string(c);
    item["count"] = count;
    doc["compound"].push_back(std::move(item));
  }
  emit(cfg, out, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_cosmo(const RunConfig& cfg, std::ostream& out, std::ostream* progress) {
  const Format f = pick(cfg, Format::Json, {Format::Json, Format::Text});
  const PeriodicTable t = load_table(cfg);
  CosmoOptions opts;
  opts.depth = cfg.depth;
  opts.cap_days = cfg.cap_days;
  opts.generation_cap = cfg.generation_cap;
  opts.threads = cfg.threads;
  GenerationCallback report;
  if (progress) {
    report = [progress](const GenerationRecord& g) {
      *progress << "generation " << g.index << ": " << g.count
                << " chunks, max longevity " << g.max_longevity << std::endl;
    };
  }
  const ProofCertificate c = cosmo(t, opts, report);
  if (f == Format::Json) {
    emit(cfg, out, certificate_to_json(c));
  } else {
    std::ostringstream s;
    s << (c.status == ProofStatus::Proven ? "PROVEN" : "NOT-PROVEN")
      << " L=" << c.depth << " haltedAt=" << c.halted_at
      << " M=" << c.max_longevity << " N=" << c.derived_n << '\n';
    emit(cfg, out, s.str());
  }
  return c.status == ProofStatus::Proven ? kExitOk : kExitNotProven;
}

namespace {

void diagnose(std::ostream& err, const std::string& kind, const std::string& message,
              Json extra = Json::object()) {
  Json doc;
  doc["error"] = kind;
  doc["message"] = message;
  for (auto& [k, v] : extra.items()) doc[k] = v;
  err << doc.dump() << std::endl;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Audioactive decay: look-and-say chemistry and the cosmological search"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--L", cfg.depth, "screening depth")->check(CLI::PositiveNumber);
    sub->add_option("--cap-days", cfg.cap_days, "longevity cap in days")
        ->check(CLI::PositiveNumber);
    sub->add_option("--generation-cap", cfg.generation_cap, "last generation tried")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed string for the periodic table");
    sub->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "write the artifact here instead of stdout");
  };

  std::string literal;
  std::size_t days = 0;
  bool charpoly = false;
  bool verbose = false;

  auto* say = app.add_subcommand("say", "print evolve(s, 0..n) and length ratios");
  say->add_option("string", literal)->required();
  say->add_option("days", days)->required();
  auto* split = app.add_subcommand("split", "split a string into atoms");
  split->add_option("string", literal)->required();
  auto* table = app.add_subcommand("table", "derive the periodic table");
  auto* lambda = app.add_subcommand("lambda", "Conway's constant");
  lambda->add_flag("--charpoly", charpoly, "print the characteristic polynomial");
  auto* abundance = app.add_subcommand("abundance", "element abundances");
  auto* longev = app.add_subcommand("longevity", "days until a string is a compound of elements");
  longev->add_option("string", literal)->required();
  auto* cosmo_cmd = app.add_subcommand("cosmo", "run the cosmological search");
  cosmo_cmd->add_option("--threads", cfg.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cosmo_cmd->add_flag("--verbose", verbose, "report each generation on stderr");
  for (auto* sub : {say, split, table, lambda, abundance, longev, cosmo_cmd}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (format == "json") cfg.format = Format::Json;
  if (format == "csv") cfg.format = Format::Csv;
  if (format == "text") cfg.format = Format::Text;

  try {
    if (*say) return cmd_say(literal, days, cfg, out);
    if (*split) return cmd_split(literal, cfg, out);
    if (*table) return cmd_table(cfg, out);
    if (*lambda) return cmd_lambda(cfg, charpoly, out);
    if (*abundance) return cmd_abundance(cfg, out);
    if (*longev) return cmd_longevity(literal, cfg, out);
    if (*cosmo_cmd) return cmd_cosmo(cfg, out, verbose ? &err : nullptr);
  } catch (const ParseError& e) {
    diagnose(err, "ParseError", e.what());
    return kExitInput;
  } catch (const UsageError& e) {
    diagnose(err, "UsageError", e.what());
    return kExitInput;
  } catch (const LongevityCapExceeded& e) {
    diagnose(err, "LongevityCapExceeded", e.what(),
             {{"string", e.literal()}, {"capDays", e.cap_days()}});
    return kExitNotProven;
  } catch (const ResourceCapExceeded& e) {
    diagnose(err, "ResourceCapExceeded", e.what());
    return kExitNotProven;
  } catch (const NonHalting& e) {
    diagnose(err, "NonHalting", e.what());
    return kExitNotProven;
  } catch (const Error& e) {
    diagnose(err, "InvariantViolation", e.what());
    return kExitInternal;
  } catch (const std::exception& e) {
    diagnose(err, "InternalError", e.what());
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace audioactive::cli
