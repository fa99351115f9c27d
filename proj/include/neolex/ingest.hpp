#pragma once

// Readers for open-dict and WikiPron pronunciation files, and ISO 639
// language-code relabeling.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neolex/error.hpp"
#include "neolex/text.hpp"

namespace neolex {

enum class DictFormat : std::uint8_t { OpenDict, WikiPron };

struct DictEntry {
  std::string headword;
  std::string language;
  std::vector<std::string> variants;

  friend bool operator==(const DictEntry&, const DictEntry&) = default;
};

struct ParsedLine {
  std::string headword;
  std::vector<std::string> variants;

  friend bool operator==(const ParsedLine&, const ParsedLine&) = default;
};

/// Splits one physical line into headword and raw pronunciation variants.
/// nullopt means the line is malformed and should be skipped.
///
/// open-dict: `headword<TAB>/ipa/[, /ipa/...]`, or a comma in place of the
/// tab when the line has no tab at all.
/// WikiPron: `headword<TAB>seg seg seg`, exactly two fields.
inline std::optional<ParsedLine> parse_line(std::string_view line,
                                            DictFormat format) {
  line = text::clean_line(line, false);
  ParsedLine out;

  if (format == DictFormat::WikiPron) {
    const auto fields = text::split(line, '\t');
    if (fields.size() != 2) return std::nullopt;
    if (text::is_blank(fields[0]) || text::is_blank(fields[1]))
      return std::nullopt;
    out.headword = std::string(fields[0]);
    out.variants.emplace_back(text::trim(fields[1]));
    return out;
  }

  std::size_t sep = line.find('\t');
  const bool tab = sep != std::string_view::npos;
  if (!tab) sep = line.find(',');
  if (sep == std::string_view::npos) return std::nullopt;

  const std::string_view head = line.substr(0, sep);
  const std::string_view pron = line.substr(sep + 1);
  if (text::is_blank(head) || text::is_blank(pron)) return std::nullopt;
  if (tab && pron.find('\t') != std::string_view::npos) return std::nullopt;

  out.headword = std::string(head);
  for (std::string_view v : text::split(pron, ',')) {
    v = text::trim(v);
    if (v.empty()) return std::nullopt;
    if (std::find(out.variants.begin(), out.variants.end(), v) ==
        out.variants.end())
      out.variants.emplace_back(v);
  }
  return out;
}

struct ReadResult {
  std::vector<DictEntry> entries;
  std::size_t skipped = 0;
};

inline ReadResult read_dictionary(std::istream& in, DictFormat format,
                                  const std::string& language) {
  ReadResult result;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const std::string_view view = text::clean_line(line, first);
    first = false;
    if (text::is_blank(view)) continue;
    auto parsed = parse_line(view, format);
    if (!parsed) {
      ++result.skipped;
      continue;
    }
    result.entries.push_back(DictEntry{std::move(parsed->headword), language,
                                       std::move(parsed->variants)});
  }
  return result;
}

inline ReadResult read_dictionary(const std::filesystem::path& path,
                                  DictFormat format,
                                  const std::string& language) {
  std::ifstream in = open_input(path, "cannot read dictionary");
  ReadResult result = read_dictionary(in, format, language);
  if (in.bad()) throw IoError("error while reading dictionary", path.string());
  return result;
}

/// Two-letter (ISO 639-1) to three-letter (ISO 639-3) code table.
class LanguageCodeMap {
 public:
  LanguageCodeMap() = default;

  /// Adds a pair; throws std::invalid_argument when the pair would make the
  /// table non-injective or a code is malformed.
  void add(std::string_view two_letter, std::string_view three_letter) {
    auto lower = [](std::string_view s, std::size_t len) {
      return s.size() == len && std::all_of(s.begin(), s.end(), [](char c) {
               return c >= 'a' && c <= 'z';
             });
    };
    if (!lower(two_letter, 2) || !lower(three_letter, 3))
      throw std::invalid_argument("malformed language pair: " +
                                  std::string(two_letter) + " " +
                                  std::string(three_letter));
    const std::string key(two_letter);
    const std::string value(three_letter);
    if (auto it = forward_.find(key); it != forward_.end()) {
      if (it->second == value) return;
      throw std::invalid_argument("conflicting entries for " + key);
    }
    if (reverse_.count(value))
      throw std::invalid_argument("code " + value + " already mapped from " +
                                  reverse_.at(value));
    forward_.emplace(key, value);
    reverse_.emplace(value, key);
  }

  std::optional<std::string> find(std::string_view two_letter) const {
    auto it = forward_.find(std::string(two_letter));
    if (it == forward_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return forward_.size(); }
  const std::map<std::string, std::string>& entries() const { return forward_; }

  /// Lines of `2letter<TAB>3letter`; '#' starts a comment.
  static LanguageCodeMap parse(std::istream& in) {
    LanguageCodeMap map;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      std::string_view view = text::clean_line(line, number == 1);
      if (auto hash = view.find('#'); hash != std::string_view::npos)
        view = view.substr(0, hash);
      view = text::trim(view);
      if (view.empty()) continue;
      std::istringstream fields{std::string(view)};
      std::string two, three, extra;
      fields >> two >> three;
      if (three.empty() || (fields >> extra))
        throw std::invalid_argument("language map line " +
                                    std::to_string(number) + " is malformed");
      map.add(two, three);
    }
    return map;
  }

  static LanguageCodeMap load(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, "cannot read language map");
    return parse(in);
  }

 private:
  std::map<std::string, std::string> forward_;
  std::map<std::string, std::string> reverse_;
};

/// True for source labels such as "sw", "es_MX", "zh_hans" or "spa".
inline bool is_source_label(std::string_view code) {
  std::size_t i = 0;
  while (i < code.size() && code[i] >= 'a' && code[i] <= 'z') ++i;
  if (i < 2 || i > 3) return false;
  if (i == code.size()) return true;
  if (code[i] != '_' && code[i] != '-') return false;
  if (i + 1 == code.size()) return false;
  return std::all_of(code.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                     code.end(), [](char c) {
                       return std::isalpha(static_cast<unsigned char>(c)) != 0;
                     });
}

/// Strips the region tag and maps two-letter codes through the table;
/// three-letter codes pass through. nullopt for unknown or malformed codes.
inline std::optional<std::string> relabel_language(std::string_view code,
                                                   const LanguageCodeMap& map) {
  if (!is_source_label(code)) return std::nullopt;
  const std::size_t end = code.find_first_of("_-");
  const std::string_view bare = code.substr(0, end);
  if (bare.size() == 3) return std::string(bare);
  return map.find(bare);
}

/// Source label implied by a dictionary file name: "es_MX.txt" -> "es_MX",
/// "spa_latn_broad.tsv" -> "spa".
inline std::string language_label_from_path(const std::filesystem::path& path) {
  std::string stem = path.filename().string();
  stem = stem.substr(0, stem.find('.'));
  if (is_source_label(stem)) return stem;
  std::size_t i = 0;
  while (i < stem.size() && stem[i] >= 'a' && stem[i] <= 'z') ++i;
  return stem.substr(0, i);
}

}  // namespace neolex
