#pragma once

// The official southern Quechua alphabet and the IPA -> grapheme mapping.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neolex/ipa.hpp"

namespace neolex {

enum class Grapheme : std::uint8_t {
  A, I, U,
  Ch, Chh, ChEjective,
  H,
  K, Kh, KEjective,
  L, Ll, M, N, Enye,
  P, Ph, PEjective,
  Q, Qh, QEjective,
  R, S,
  T, Th, TEjective,
  W, Y,
};

inline constexpr std::size_t kGraphemeCount =
    static_cast<std::size_t>(Grapheme::Y) + 1;

enum class GraphemeClass : std::uint8_t { Vowel, Consonant };

inline constexpr std::array<Grapheme, kGraphemeCount> all_graphemes() {
  std::array<Grapheme, kGraphemeCount> out{};
  for (std::size_t i = 0; i < kGraphemeCount; ++i)
    out[i] = static_cast<Grapheme>(i);
  return out;
}

inline std::string_view spelling(Grapheme g) {
  static constexpr std::array<std::string_view, kGraphemeCount> kSpellings = {
      "a",  "i",  "u",  "ch", "chh", "ch'", "h",  "k",  "kh", "k'",
      "l",  "ll", "m",  "n",  "\u00F1", "p",   "ph", "p'", "q",  "qh",
      "q'", "r",  "s",  "t",  "th",  "t'",  "w",  "y"};
  return kSpellings[static_cast<std::size_t>(g)];
}

inline constexpr GraphemeClass grapheme_class(Grapheme g) {
  return (g == Grapheme::A || g == Grapheme::I || g == Grapheme::U)
             ? GraphemeClass::Vowel
             : GraphemeClass::Consonant;
}

inline constexpr bool is_vowel(Grapheme g) {
  return grapheme_class(g) == GraphemeClass::Vowel;
}

inline constexpr bool is_uvular(Grapheme g) {
  return g == Grapheme::Q || g == Grapheme::Qh || g == Grapheme::QEjective;
}

struct MappedSegment {
  Grapheme grapheme = Grapheme::A;
  bool lowered = false;  // mid vowel [e ɛ o ɔ] written as i / u
  Phone source;

  friend bool operator==(const MappedSegment&, const MappedSegment&) = default;
};

struct MappingRow {
  Base base;
  bool aspirated;
  bool ejective;
  Grapheme grapheme;
  bool lowered;
};

inline constexpr std::array<MappingRow, 41> kMappingTable = {{
    {Base::A, false, false, Grapheme::A, false},
    {Base::BackA, false, false, Grapheme::A, false},
    {Base::I, false, false, Grapheme::I, false},
    {Base::NearI, false, false, Grapheme::I, false},
    {Base::OpenMidE, false, false, Grapheme::I, true},
    {Base::CloseMidE, false, false, Grapheme::I, true},
    {Base::NearU, false, false, Grapheme::U, false},
    {Base::U, false, false, Grapheme::U, false},
    {Base::OpenMidO, false, false, Grapheme::U, true},
    {Base::CloseMidO, false, false, Grapheme::U, true},
    {Base::Affricate, false, false, Grapheme::Ch, false},
    {Base::Postalveolar, false, false, Grapheme::Ch, false},
    {Base::Affricate, true, false, Grapheme::Chh, false},
    {Base::Affricate, false, true, Grapheme::ChEjective, false},
    {Base::H, false, false, Grapheme::H, false},
    {Base::K, false, false, Grapheme::K, false},
    {Base::VelarFricative, false, false, Grapheme::K, false},
    {Base::K, true, false, Grapheme::Kh, false},
    {Base::K, false, true, Grapheme::KEjective, false},
    {Base::L, false, false, Grapheme::L, false},
    {Base::PalatalLateral, false, false, Grapheme::Ll, false},
    {Base::M, false, false, Grapheme::M, false},
    {Base::N, false, false, Grapheme::N, false},
    {Base::PalatalNasal, false, false, Grapheme::Enye, false},
    {Base::P, false, false, Grapheme::P, false},
    {Base::BilabialVoiced, false, false, Grapheme::P, false},
    {Base::BilabialFricative, false, false, Grapheme::P, false},
    {Base::P, true, false, Grapheme::Ph, false},
    {Base::P, false, true, Grapheme::PEjective, false},
    {Base::Q, false, false, Grapheme::Q, false},
    {Base::UvularStop, false, false, Grapheme::Q, false},
    {Base::UvularFricative, false, false, Grapheme::Q, false},
    {Base::Q, true, false, Grapheme::Qh, false},
    {Base::Q, false, true, Grapheme::QEjective, false},
    {Base::R, false, false, Grapheme::R, false},
    {Base::S, false, false, Grapheme::S, false},
    {Base::T, false, false, Grapheme::T, false},
    {Base::T, true, false, Grapheme::Th, false},
    {Base::T, false, true, Grapheme::TEjective, false},
    {Base::W, false, false, Grapheme::W, false},
    {Base::J, false, false, Grapheme::Y, false},
}};

/// Maps one phone to its grapheme, or nullopt when the phone has no
/// official spelling. ɰ is never mapped here; the validator resolves it in
/// context.
inline std::optional<MappedSegment> map_phone(const Phone& phone) {
  for (const auto& row : kMappingTable) {
    if (row.base == phone.base && row.aspirated == phone.aspirated &&
        row.ejective == phone.ejective) {
      return MappedSegment{row.grapheme, row.lowered, phone};
    }
  }
  return std::nullopt;
}

/// The phone a grapheme reads back as when the spelling is taken at face
/// value.
inline Phone canonical_phone(Grapheme g) {
  for (const auto& row : kMappingTable) {
    if (row.grapheme == g && !row.lowered)
      return Phone{row.base, row.aspirated, row.ejective,
                   std::string(spelling(g))};
  }
  return Phone{};
}

/// Reads official orthography back into segments, one grapheme per unit,
/// longest spelling first. Dots mark syllable boundaries and are skipped.
/// Returns nullopt when the text contains something that is not an
/// official spelling.
inline std::optional<std::vector<MappedSegment>> read_spelling(
    std::string_view text) {
  std::array<Grapheme, kGraphemeCount> order = all_graphemes();
  std::stable_sort(order.begin(), order.end(), [](Grapheme a, Grapheme b) {
    return spelling(a).size() > spelling(b).size();
  });

  std::vector<MappedSegment> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '.') {
      ++i;
      continue;
    }
    const std::string_view rest = text.substr(i);
    std::optional<Grapheme> hit;
    std::size_t width = 0;
    if (rest.starts_with("n\u0303")) {  // decomposed ñ
      hit = Grapheme::Enye;
      width = 3;
    }
    for (Grapheme g : order) {
      if (hit) break;
      if (rest.starts_with(spelling(g))) {
        hit = g;
        width = spelling(g).size();
      }
    }
    if (!hit) return std::nullopt;
    out.push_back(MappedSegment{*hit, false, canonical_phone(*hit)});
    i += width;
  }
  return out;
}

struct InventoryRow {
  std::string ipa;
  std::string grapheme;
};

/// Every recognized notation with the spelling it maps to, including the
/// aspirated and ejective forms of the stop series. Mid vowels are only
/// licensed next to a uvular, and ɰ only as a coda before one.
inline std::vector<InventoryRow> inventory_table() {
  std::vector<InventoryRow> rows;
  for (const auto& entry : detail::kSymbolTable) {
    Phone phone{entry.base, entry.aspirated, false,
                unicode::to_utf8(entry.sequence)};
    if (phone.base == Base::VelarApproximant) {
      rows.push_back({phone.raw, std::string(spelling(Grapheme::Ll))});
      continue;
    }
    if (auto seg = map_phone(phone))
      rows.push_back({phone.raw, std::string(spelling(seg->grapheme))});
    if (entry.aspirated || !is_stop_or_affricate(entry.base)) continue;
    for (const auto& [aspirated, marker] :
         {std::pair{true, "\u02B0"}, std::pair{false, "\u02BC"}}) {
      Phone laryngeal = phone;
      laryngeal.aspirated = aspirated;
      laryngeal.ejective = !aspirated;
      laryngeal.raw += marker;
      if (auto seg = map_phone(laryngeal))
        rows.push_back({laryngeal.raw, std::string(spelling(seg->grapheme))});
    }
  }
  return rows;
}

}  // namespace neolex
