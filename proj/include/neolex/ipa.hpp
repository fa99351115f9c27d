#pragma once

// IPA normalization and maximal-munch tokenization into phones.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neolex/unicode.hpp"

namespace neolex {

enum class DiacriticPolicy : std::uint8_t { Reject, Strip };

/// Recognized base symbols.
enum class Base : std::uint8_t {
  A,                 // a
  BackA,             // ɑ
  I,                 // i
  NearI,             // ɪ
  CloseMidE,         // e
  OpenMidE,          // ɛ
  U,                 // u
  NearU,             // ʊ
  CloseMidO,         // o
  OpenMidO,          // ɔ
  Affricate,         // tʃ
  Postalveolar,      // ʃ
  H,                 // h
  K,                 // k
  VelarFricative,    // x
  L,                 // l
  PalatalLateral,    // ʎ
  M,                 // m
  N,                 // n
  PalatalNasal,      // ɲ
  P,                 // p
  BilabialVoiced,    // β
  BilabialFricative, // ɸ
  Q,                 // q
  UvularStop,        // ɢ
  UvularFricative,   // χ
  R,                 // r
  S,                 // s
  T,                 // t
  W,                 // w
  J,                 // j
  VelarApproximant,  // ɰ
};

inline constexpr std::size_t kBaseCount =
    static_cast<std::size_t>(Base::VelarApproximant) + 1;

inline std::string_view ipa_symbol(Base b) {
  static constexpr std::array<std::string_view, kBaseCount> kSymbols = {
      "a", "ɑ", "i", "ɪ", "e", "ɛ", "u", "ʊ", "o", "ɔ", "tʃ",
      "ʃ", "h", "k", "x", "l", "ʎ", "m", "n", "ɲ", "p", "β",
      "ɸ", "q", "ɢ", "χ", "r", "s", "t", "w", "j", "ɰ"};
  return kSymbols[static_cast<std::size_t>(b)];
}

inline bool is_stop_or_affricate(Base b) {
  switch (b) {
    case Base::P:
    case Base::T:
    case Base::K:
    case Base::Q:
    case Base::UvularStop:
    case Base::Affricate:
      return true;
    default:
      return false;
  }
}

struct Phone {
  Base base = Base::A;
  bool aspirated = false;
  bool ejective = false;
  std::string raw;

  friend bool operator==(const Phone&, const Phone&) = default;
};

struct TokenError {
  enum class Kind : std::uint8_t { UnknownSymbol, DiacriticPresent };
  Kind kind = Kind::UnknownSymbol;
  std::size_t position = 0;  // code point index into the normalized input

  friend bool operator==(const TokenError&, const TokenError&) = default;
};

struct Tokenization {
  std::vector<Phone> phones;
  std::optional<TokenError> error;

  bool ok() const { return !error.has_value(); }
};

namespace detail {

inline constexpr char32_t kTieBar = U'\u0361';
inline constexpr char32_t kTieBarBelow = U'\u035C';
inline constexpr char32_t kCaron = U'\u030C';
inline constexpr char32_t kMacron = U'\u0304';
inline constexpr char32_t kAspiration = U'ʰ';
inline constexpr char32_t kEjective = U'ʼ';
inline constexpr char32_t kApostrophe = U'\'';
inline constexpr char32_t kPrimaryStress = U'ˈ';
inline constexpr char32_t kSecondaryStress = U'ˌ';

struct SymbolEntry {
  std::u32string_view sequence;
  Base base;
  bool aspirated;
};

// Longest sequences first; the tokenizer takes the first match.
inline constexpr std::array<SymbolEntry, 41> kSymbolTable = {{
    {U"t\u0361\u0283", Base::Affricate, false},
    {U"t\u035C\u0283", Base::Affricate, false},
    {U"tʃ", Base::Affricate, false},
    {U"c\u030C", Base::Affricate, false},     // č
    {U"s\u030C", Base::Postalveolar, false},  // š
    {U"k\u0304", Base::K, false},  // k̄
    {U"pɸ", Base::P, true},
    {U"pφ", Base::P, true},
    {U"ʧ", Base::Affricate, false},
    {U"a", Base::A, false},
    {U"ɑ", Base::BackA, false},
    {U"i", Base::I, false},
    {U"ɪ", Base::NearI, false},
    {U"e", Base::CloseMidE, false},
    {U"ɛ", Base::OpenMidE, false},
    {U"u", Base::U, false},
    {U"ʊ", Base::NearU, false},
    {U"o", Base::CloseMidO, false},
    {U"ɔ", Base::OpenMidO, false},
    {U"ʃ", Base::Postalveolar, false},
    {U"h", Base::H, false},
    {U"k", Base::K, false},
    {U"x", Base::VelarFricative, false},
    {U"l", Base::L, false},
    {U"ʎ", Base::PalatalLateral, false},
    {U"m", Base::M, false},
    {U"n", Base::N, false},
    {U"ɲ", Base::PalatalNasal, false},
    {U"p", Base::P, false},
    {U"β", Base::BilabialVoiced, false},
    {U"ɸ", Base::BilabialFricative, false},
    {U"φ", Base::BilabialFricative, false},
    {U"q", Base::Q, false},
    {U"ɢ", Base::UvularStop, false},
    {U"χ", Base::UvularFricative, false},
    {U"r", Base::R, false},
    {U"s", Base::S, false},
    {U"t", Base::T, false},
    {U"w", Base::W, false},
    {U"j", Base::J, false},
    {U"ɰ", Base::VelarApproximant, false},
}};

/// Marks governed by the diacritic policy: combining diacritics, length,
/// tone letters and tone numbers. Tie bars, aspiration and the ejective
/// apostrophe are segmental and handled by the tokenizer itself.
inline bool is_policy_mark(char32_t c) {
  if (c == kTieBar || c == kTieBarBelow) return false;
  if (c == kAspiration || c == kEjective) return false;
  if (c == kPrimaryStress || c == kSecondaryStress) return false;
  return unicode::is_combining_mark(c) || unicode::is_modifier(c) ||
         unicode::is_numeric(c);
}

// Combining marks that belong to a base symbol (č, š, k̄).
inline bool is_symbol_mark(char32_t prev, char32_t c) {
  return (c == kCaron && (prev == U'c' || prev == U's')) ||
         (c == kMacron && prev == U'k');
}

inline bool is_delimiter(char32_t c) {
  return c == U'/' || c == U'[' || c == U']';
}

}  // namespace detail

/// Strips delimiters, stress marks, syllable dots and whitespace, and
/// canonically decomposes the result.
inline std::string normalize(std::string_view raw_pron) {
  std::u32string text = unicode::to_u32(unicode::nfd(raw_pron));

  auto is_space = [](char32_t c) { return unicode::is_white_space(c); };
  auto first = std::find_if_not(text.begin(), text.end(), is_space);
  auto last = std::find_if_not(text.rbegin(), text.rend(), is_space).base();
  if (first >= last) return {};
  std::u32string core(first, last);
  while (!core.empty() && detail::is_delimiter(core.front())) core.erase(0, 1);
  while (!core.empty() && detail::is_delimiter(core.back())) core.pop_back();

  std::u32string out;
  out.reserve(core.size());
  for (char32_t c : core) {
    if (c == detail::kPrimaryStress || c == detail::kSecondaryStress) continue;
    if (c == U'.' || unicode::is_white_space(c)) continue;
    out.push_back(c);
  }
  return unicode::to_utf8(out);
}

/// Splits a normalized pronunciation into phones by maximal munch.
inline Tokenization tokenize(std::string_view normalized,
                             DiacriticPolicy policy = DiacriticPolicy::Reject) {
  using detail::SymbolEntry;
  const std::u32string input = unicode::to_u32(normalized);
  Tokenization result;

  // Pass 1: apply the diacritic policy, remembering original positions.
  std::u32string text;
  std::vector<std::size_t> origin;
  text.reserve(input.size());
  origin.reserve(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    const char32_t c = input[i];
    const bool part_of_symbol =
        !text.empty() && detail::is_symbol_mark(text.back(), c);
    if (!part_of_symbol && detail::is_policy_mark(c)) {
      if (policy == DiacriticPolicy::Reject) {
        result.error = TokenError{TokenError::Kind::DiacriticPresent, i};
        return result;
      }
      continue;
    }
    text.push_back(c);
    origin.push_back(i);
  }

  auto fail = [&](std::size_t at) {
    result.phones.clear();
    result.error = TokenError{TokenError::Kind::UnknownSymbol, origin[at]};
    return result;
  };

  // Pass 2: maximal munch, then attach laryngeal modifiers.
  std::u32string_view rest(text);
  std::size_t j = 0;
  while (j < text.size()) {
    const SymbolEntry* match = nullptr;
    for (const auto& entry : detail::kSymbolTable) {
      if (rest.substr(j).starts_with(entry.sequence)) {
        match = &entry;
        break;
      }
    }
    if (!match) return fail(j);

    Phone phone;
    phone.base = match->base;
    phone.aspirated = match->aspirated;
    phone.raw = unicode::to_utf8(match->sequence);
    j += match->sequence.size();

    while (j < text.size()) {
      const char32_t c = text[j];
      const bool aspiration = c == detail::kAspiration;
      const bool ejective =
          c == detail::kEjective ||
          (c == detail::kApostrophe && is_stop_or_affricate(phone.base));
      if (!aspiration && !ejective) break;
      if (phone.aspirated || phone.ejective) return fail(j);
      (aspiration ? phone.aspirated : phone.ejective) = true;
      unicode::append_utf8(phone.raw, c);
      ++j;
    }
    result.phones.push_back(std::move(phone));
  }
  return result;
}

}  // namespace neolex
