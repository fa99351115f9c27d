#pragma once

// scan -> validate -> transcribe -> gloss, plus the candidate database and
// the per-language report.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "neolex/error.hpp"
#include "neolex/gloss.hpp"
#include "neolex/ingest.hpp"
#include "neolex/ipa.hpp"
#include "neolex/phonotactics.hpp"
#include "neolex/transcriber.hpp"

namespace neolex {

struct Candidate {
  std::string language;
  std::string headword;
  std::string ipa;  // the accepted variant, normalized
  std::string spelling;
  std::string syllabification;
  std::vector<std::string> glosses;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct LanguageStats {
  std::string language;
  std::uint64_t total = 0;
  std::uint64_t eligible = 0;
  std::uint64_t translated = 0;

  LanguageStats& operator+=(const LanguageStats& other) {
    total += other.total;
    eligible += other.eligible;
    translated += other.translated;
    return *this;
  }

  friend bool operator==(const LanguageStats&, const LanguageStats&) = default;
};

struct ScanOptions {
  DiacriticPolicy policy = DiacriticPolicy::Reject;
  const GlossIndex* glosses = nullptr;
  std::size_t workers = 1;
};

struct ScanResult {
  std::vector<Candidate> candidates;  // in first-seen word order
  std::vector<LanguageStats> stats;   // sorted by language code
};

namespace detail {

// One distinct (language, headword) with every pronunciation seen for it.
struct Word {
  const std::string* language;
  const std::string* headword;
  std::vector<const std::string*> variants;
};

inline std::vector<Word> group_words(const std::vector<DictEntry>& entries) {
  std::vector<Word> words;
  std::unordered_map<std::string, std::size_t> slot;
  for (const DictEntry& e : entries) {
    std::string key = e.language;
    key += '\t';
    key += e.headword;
    auto [it, fresh] = slot.try_emplace(std::move(key), words.size());
    if (fresh) words.push_back(Word{&e.language, &e.headword, {}});
    Word& w = words[it->second];
    for (const std::string& v : e.variants) {
      const bool seen = std::any_of(w.variants.begin(), w.variants.end(),
                                    [&](const std::string* s) { return *s == v; });
      if (!seen) w.variants.push_back(&v);
    }
  }
  return words;
}

inline std::optional<Candidate> evaluate_word(const Word& word,
                                              const ScanOptions& options) {
  for (const std::string* variant : word.variants) {
    const std::string normalized = normalize(*variant);
    if (normalized.empty()) continue;
    const Tokenization tokens = tokenize(normalized, options.policy);
    if (!tokens.ok()) continue;
    const ValidationResult result = validate(tokens.phones);
    if (!result.eligible) continue;

    Candidate c;
    c.language = *word.language;
    c.headword = *word.headword;
    c.ipa = normalized;
    c.spelling = transcribe(result);
    c.syllabification = syllabification_text(result.syllables);
    if (options.glosses)
      c.glosses = options.glosses->lookup(c.language, c.headword);
    return c;
  }
  return std::nullopt;
}

}  // namespace detail

/// Evaluates every distinct word; a word is eligible when any of its
/// pronunciations passes, and the first passing one becomes its candidate.
inline ScanResult scan(const std::vector<DictEntry>& entries,
                       const ScanOptions& options = {}) {
  const std::vector<detail::Word> words = detail::group_words(entries);
  std::vector<std::optional<Candidate>> slots(words.size());

  using Partial = std::map<std::string, LanguageStats>;
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(options.workers, words.size()));
  std::vector<Partial> partials(workers);
  std::atomic<std::size_t> next{0};

  auto work = [&](Partial& partial) {
    for (std::size_t i = next.fetch_add(1); i < words.size();
         i = next.fetch_add(1)) {
      LanguageStats& s = partial[*words[i].language];
      s.language = *words[i].language;
      ++s.total;
      slots[i] = detail::evaluate_word(words[i], options);
      if (slots[i]) {
        ++s.eligible;
        if (!slots[i]->glosses.empty()) ++s.translated;
      }
    }
  };

  if (workers == 1) {
    work(partials[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { work(partials[w]); });
  }

  Partial merged;
  for (const Partial& p : partials) {
    for (const auto& [lang, s] : p) {
      LanguageStats& m = merged[lang];
      m.language = lang;
      m += s;
    }
  }

  ScanResult result;
  for (auto& slot : slots)
    if (slot) result.candidates.push_back(std::move(*slot));
  for (auto& [lang, s] : merged) result.stats.push_back(std::move(s));
  return result;
}

/// Percentage with two decimals, rounded half up; "0.00%" on a zero
/// denominator.
inline std::string format_percent(std::uint64_t numerator,
                                  std::uint64_t denominator) {
  if (denominator == 0) return "0.00%";
  // round(100 * n / d, 2) == floor((20000 n + d) / 2d) / 100
  __extension__ typedef unsigned __int128 Wide;
  const Wide scaled = (static_cast<Wide>(numerator) * 20000u + denominator) /
                      (static_cast<Wide>(denominator) * 2u);
  const auto hundredths = static_cast<std::uint64_t>(scaled);
  std::string frac = std::to_string(hundredths % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return std::to_string(hundredths / 100) + "." + frac + "%";
}

enum class ReportFormat : std::uint8_t { Tsv, Markdown };

/// Rows by descending eligible count then language code, followed by a
/// TOTAL row.
inline std::string render_report(std::vector<LanguageStats> stats,
                                 ReportFormat format) {
  std::sort(stats.begin(), stats.end(),
            [](const LanguageStats& a, const LanguageStats& b) {
              if (a.eligible != b.eligible) return a.eligible > b.eligible;
              return a.language < b.language;
            });
  LanguageStats total{"TOTAL", 0, 0, 0};
  for (const auto& s : stats) total += s;
  stats.push_back(total);

  const std::vector<std::string> header = {
      "language", "total", "eligible", "translated", "eligible/total",
      "translated/eligible"};

  std::string out;
  auto row = [&](const std::vector<std::string>& cells) {
    if (format == ReportFormat::Tsv) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += '\t';
        out += cells[i];
      }
    } else {
      out += '|';
      for (const auto& c : cells) out += " " + c + " |";
    }
    out += '\n';
  };

  row(header);
  if (format == ReportFormat::Markdown)
    out += "|---|---:|---:|---:|---:|---:|\n";
  for (const auto& s : stats) {
    row({s.language, std::to_string(s.total), std::to_string(s.eligible),
         std::to_string(s.translated), format_percent(s.eligible, s.total),
         format_percent(s.translated, s.eligible)});
  }
  return out;
}

inline constexpr std::string_view kCandidateHeader =
    "language\theadword\tipa\tspelling\tsyllabification\tglosses\n";

/// Candidate TSV, rows sorted by (language, headword, ipa).
inline std::string format_candidates(std::vector<Candidate> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return std::tie(a.language, a.headword, a.ipa) <
                     std::tie(b.language, b.headword, b.ipa);
            });
  std::string out(kCandidateHeader);
  for (const Candidate& c : candidates) {
    out += c.language + '\t' + c.headword + '\t' + c.ipa + '\t' + c.spelling +
           '\t' + c.syllabification + '\t';
    for (std::size_t i = 0; i < c.glosses.size(); ++i) {
      if (i) out += ';';
      out += c.glosses[i];
    }
    out += '\n';
  }
  return out;
}

inline void write_text_file(const std::filesystem::path& path,
                            std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file", path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("error while writing file", path.string());
}

inline void write_candidates(const std::vector<Candidate>& candidates,
                             const std::filesystem::path& path) {
  write_text_file(path, format_candidates(candidates));
}

}  // namespace neolex
