#include "audioactive/cosmology.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "audioactive/errors.hpp"

namespace audioactive {

LongevityEngine::LongevityEngine(const PeriodicTable& table,
                                 SplitterOptions splitter_options)
    : table_(&table), splitter_(splitter_options) {}

std::optional<int> LongevityEngine::atom_days(const AudioString& atom,
                                              int budget) {
  if (table_->is_stable(atom)) return 0;
  if (const auto it = exact_.find(atom); it != exact_.end()) {
    if (it->second <= budget) return it->second;
    return std::nullopt;
  }
  if (const auto it = exceeds_.find(atom);
      it != exceeds_.end() && it->second >= budget) {
    return std::nullopt;
  }
  const auto give_up = [&] {
    int& known = exceeds_[atom];
    known = std::max(known, budget);
    return std::nullopt;
  };
  if (budget == 0) return give_up();

  int worst = 0;
  for (const auto& child : splitter_.split_atoms(jhc(atom)).atoms) {
    const auto d = atom_days(child, budget - 1);
    if (!d) return give_up();
    worst = std::max(worst, *d);
  }
  exact_.emplace(atom, worst + 1);
  return worst + 1;
}

int LongevityEngine::days(const AudioString& s, int cap_days) {
  if (s.empty()) throw std::invalid_argument("longevity of an empty string");
  if (cap_days < 1) throw std::invalid_argument("cap_days must be >= 1");
  int worst = 0;
  for (const auto& atom : splitter_.split_atoms(s).atoms) {
    const auto d = atom_days(atom, cap_days);
    if (!d) throw LongevityCapExceeded(s.to_literal(), cap_days);
    worst = std::max(worst, *d);
  }
  return worst;
}

LongevityResult LongevityEngine::longevity(const AudioString& s, int cap_days) {
  LongevityResult result;
  result.days = days(s, cap_days);

  std::map<AudioString, std::uint64_t> compound;
  for (auto& atom : splitter_.split_atoms(s).atoms) ++compound[std::move(atom)];
  for (int day = 0; day < result.days; ++day) {
    std::map<AudioString, std::uint64_t> next;
    for (const auto& [atom, count] : compound) {
      if (const auto id = table_->find(atom)) {
        for (const ElementId p : table_->element(*id).products) {
          next[table_->element(p).string] += count;
        }
        continue;
      }
      for (auto& child : splitter_.split_atoms(jhc(atom)).atoms) {
        next[std::move(child)] += count;
      }
    }
    compound.swap(next);
  }
  for (const auto& [atom, count] : compound) {
    result.final_compound[table_->classify(atom)] += count;
  }
  return result;
}

LongevityResult longevity(const AudioString& s, const PeriodicTable& t,
                          int cap_days) {
  LongevityEngine engine(t);
  return engine.longevity(s, cap_days);
}

bool screen(std::span<const Digit> chunk, Sex sex, int depth) {
  if (depth < 1) throw std::invalid_argument("screening depth must be >= 1");
  struct Frame {
    AudioString s;
    Sex sex;
    int level;  // number of ascents from the chunk
  };
  std::vector<Frame> stack;
  stack.push_back({AudioString(chunk), sex, 0});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.s.size() <= 2) return true;
    if (!grammatically_correct(f.s.view(), f.sex)) continue;
    if (f.level == depth) return true;
    AudioString parent = parent_of(f.s.view(), f.sex).known;
    stack.push_back({parent, Sex::Male, f.level + 1});
    stack.push_back({std::move(parent), Sex::Female, f.level + 1});
  }
  return false;
}

std::vector<AudioString> extensions(const AudioString& w) {
  if (w.empty()) throw std::invalid_argument("extensions of an empty string");
  std::vector<AudioString> out;
  out.reserve(15);
  for (Digit c = 1; c <= 3; ++c) out.push_back(AudioString{c} + w);
  for (Digit c = 1; c <= 3; ++c) {
    AudioString s = w;
    s.push_back(c);
    out.push_back(std::move(s));
  }
  for (Digit c = 1; c <= 3; ++c) {
    for (Digit d = 1; d <= 3; ++d) {
      AudioString s = AudioString{c} + w;
      s.push_back(d);
      out.push_back(std::move(s));
    }
  }
  return out;
}

struct CosmoSearch::Worker {
  explicit Worker(const PeriodicTable& table, const SplitterOptions& opts)
      : engine(table, opts) {}
  LongevityEngine engine;
};

CosmoSearch::CosmoSearch(const PeriodicTable& table, CosmoOptions options)
    : table_(&table), options_(options) {
  if (options_.depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (options_.cap_days < 1) throw std::invalid_argument("cap_days must be >= 1");
  if (options_.generation_cap < 1) {
    throw std::invalid_argument("generation_cap must be >= 1");
  }
  const unsigned n = std::max(1u, options_.threads);
  for (unsigned i = 0; i < n; ++i) {
    workers_.push_back(std::make_unique<Worker>(*table_, options_.splitter));
  }
}

CosmoSearch::~CosmoSearch() = default;

GenerationStep CosmoSearch::next_generation(const GenerationSet& prev) {
  std::vector<AudioString> candidates;
  candidates.reserve(prev.members.size() * kEndings.size());
  for (const auto& m : prev.members) {
    for (const auto& e : kEndings) {
      AudioString c = m;
      c.push_back(e[0]);
      c.push_back(e[1]);
      candidates.push_back(std::move(c));
    }
  }

  // Each worker owns a contiguous slice; outputs are written by index so the
  // merge is independent of scheduling.
  std::vector<char> accepted(candidates.size(), 0);
  std::vector<int> worst(workers_.size(), 0);
  std::vector<std::exception_ptr> failures(workers_.size());
  const auto run = [&](std::size_t w, std::size_t begin, std::size_t end) {
    try {
      LongevityEngine& engine = workers_[w]->engine;
      for (std::size_t i = begin; i < end; ++i) {
        const AudioString& c = candidates[i];
        if (!screen(c, Sex::Female, options_.depth)) continue;
        if (!engine.splitter().is_chunk_atom(c.view())) continue;
        accepted[i] = 1;
        worst[w] = std::max(worst[w], engine.days(c, options_.cap_days));
        for (const auto& x : extensions(c)) {
          worst[w] = std::max(worst[w], engine.days(x, options_.cap_days));
        }
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };

  const std::size_t n = workers_.size();
  const std::size_t chunk = (candidates.size() + n - 1) / n;
  if (n == 1) {
    run(0, 0, candidates.size());
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < n; ++w) {
      const std::size_t begin = std::min(candidates.size(), w * chunk);
      const std::size_t end = std::min(candidates.size(), begin + chunk);
      threads.emplace_back(run, w, begin, end);
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  GenerationStep step;
  step.next.index = prev.index + 1;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (accepted[i]) step.next.members.push_back(std::move(candidates[i]));
  }
  step.max_longevity = *std::max_element(worst.begin(), worst.end());
  return step;
}

void ProofCertificate::require_proven() const {
  if (status != ProofStatus::Proven) {
    throw NonHalting("no empty generation within " +
                     std::to_string(generations.size()) + " generations");
  }
}

ProofCertificate cosmo(const PeriodicTable& table, const CosmoOptions& options,
                       const GenerationCallback& on_generation) {
  CosmoSearch search(table, options);
  ProofCertificate cert;
  cert.depth = options.depth;
  cert.cap_days = options.cap_days;

  GenerationSet current{0, {AudioString{}}};
  for (int i = 1; i <= options.generation_cap; ++i) {
    GenerationStep step = search.next_generation(current);
    cert.max_longevity = std::max(cert.max_longevity, step.max_longevity);
    const GenerationRecord record{i, step.next.members.size(), cert.max_longevity};
    cert.generations.push_back(record);
    if (on_generation) on_generation(record);
    if (step.next.members.empty()) {
      cert.halted_at = i;
      cert.status = ProofStatus::Proven;
      break;
    }
    current = std::move(step.next);
  }
  cert.derived_n = cert.max_longevity + cert.depth + 1;
  return cert;
}

}  // namespace audioactive
