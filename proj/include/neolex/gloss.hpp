#pragma once

// File-backed English gloss index keyed by (language, case-folded headword).

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "neolex/error.hpp"
#include "neolex/text.hpp"
#include "neolex/unicode.hpp"

namespace neolex {

class GlossIndex {
 public:
  GlossIndex() = default;

  /// Appends glosses for a key; repeated keys concatenate in order.
  void add(std::string_view language, std::string_view headword,
           const std::vector<std::string>& glosses) {
    if (glosses.empty()) return;
    auto& slot = entries_[key(language, headword)];
    slot.insert(slot.end(), glosses.begin(), glosses.end());
  }

  /// Empty on a miss.
  const std::vector<std::string>& lookup(std::string_view language,
                                         std::string_view headword) const {
    static const std::vector<std::string> kNone;
    auto it = entries_.find(key(language, headword));
    return it == entries_.end() ? kNone : it->second;
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t skipped() const { return skipped_; }

  /// Lines of `lang<TAB>headword<TAB>gloss;gloss;...`.
  static GlossIndex parse(std::istream& in) {
    GlossIndex index;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      const std::string_view view = text::clean_line(line, first);
      first = false;
      if (text::is_blank(view)) continue;
      const auto fields = text::split(view, '\t');
      if (fields.size() != 3 || text::is_blank(fields[0]) ||
          text::is_blank(fields[1])) {
        ++index.skipped_;
        continue;
      }
      std::vector<std::string> glosses;
      for (std::string_view g : text::split(fields[2], ';')) {
        g = text::trim(g);
        if (!g.empty()) glosses.emplace_back(g);
      }
      if (glosses.empty()) {
        ++index.skipped_;
        continue;
      }
      index.add(text::trim(fields[0]), fields[1], glosses);
    }
    return index;
  }

  static GlossIndex load(const std::filesystem::path& path) {
    std::ifstream in = open_input(path, "cannot read gloss index");
    return parse(in);
  }

 private:
  static std::string key(std::string_view language, std::string_view headword) {
    std::string k(language);
    k += '\t';
    k += unicode::case_fold(headword);
    return k;
  }

  std::unordered_map<std::string, std::vector<std::string>> entries_;
  std::size_t skipped_ = 0;
};

}  // namespace neolex
