#pragma once

// Syllabification and eligibility under Quechua phonotactics.
//
// Syllables are V, VC, CV or CVC. Between two nuclei at most two consonants
// may appear: a single one is the next onset, a pair splits coda + onset.
// Mid vowels are licensed only next to a uvular, and [ɰ] is written <ll>
// when it closes a syllable before a uvular onset.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "neolex/ipa.hpp"
#include "neolex/phonology.hpp"

namespace neolex {

struct Syllable {
  std::optional<Grapheme> onset;
  Grapheme nucleus = Grapheme::A;
  std::optional<Grapheme> coda;
  std::size_t index = 0;

  std::string text() const {
    std::string out;
    if (onset) out += spelling(*onset);
    out += spelling(nucleus);
    if (coda) out += spelling(*coda);
    return out;
  }

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

enum class Reason : std::uint8_t {
  Ok,
  UnmappedPhone,
  Diacritic,
  VowelHiatus,
  ClusterTooLong,
  EdgeCluster,
  BadCoda,
  BadWordFinal,
  BadVowelContext,
  Empty,
  NoVowel,
};

inline std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::Ok: return "OK";
    case Reason::UnmappedPhone: return "UNMAPPED_PHONE";
    case Reason::Diacritic: return "DIACRITIC";
    case Reason::VowelHiatus: return "VOWEL_HIATUS";
    case Reason::ClusterTooLong: return "CLUSTER_TOO_LONG";
    case Reason::EdgeCluster: return "EDGE_CLUSTER";
    case Reason::BadCoda: return "BAD_CODA";
    case Reason::BadWordFinal: return "BAD_WORD_FINAL";
    case Reason::BadVowelContext: return "BAD_VOWEL_CONTEXT";
    case Reason::Empty: return "EMPTY";
    case Reason::NoVowel: return "NO_VOWEL";
  }
  return "UNKNOWN";
}

struct ValidationResult {
  bool eligible = false;
  Reason reason = Reason::Empty;
  std::vector<Syllable> syllables;     // empty unless eligible
  std::vector<MappedSegment> segments; // empty unless eligible

  static ValidationResult reject(Reason r) { return {false, r, {}, {}}; }
};

/// Graphemes that may close a syllable.
inline constexpr bool is_coda_grapheme(Grapheme g) {
  switch (g) {
    case Grapheme::P:
    case Grapheme::K:
    case Grapheme::Q:
    case Grapheme::Ch:
    case Grapheme::L:
    case Grapheme::Ll:
    case Grapheme::M:
    case Grapheme::N:
    case Grapheme::R:
    case Grapheme::S:
    case Grapheme::T:
    case Grapheme::W:
    case Grapheme::Y:
      return true;
    default:
      return false;
  }
}

/// Graphemes that may end a word: the coda set minus <t>.
inline constexpr bool is_word_final_grapheme(Grapheme g) {
  return is_coda_grapheme(g) && g != Grapheme::T;
}

/// Single-onset-maximization parse. Returns the syllables, or the reason
/// the segment string has no V/VC/CV/CVC parse.
inline std::variant<std::vector<Syllable>, Reason> syllabify(
    const std::vector<MappedSegment>& segments) {
  const std::size_t n = segments.size();
  if (n == 0) return Reason::Empty;

  auto vowel_at = [&](std::size_t i) { return is_vowel(segments[i].grapheme); };

  bool any_vowel = false;
  for (std::size_t i = 0; i < n; ++i) any_vowel = any_vowel || vowel_at(i);
  if (!any_vowel) return Reason::NoVowel;

  for (std::size_t i = 1; i < n; ++i)
    if (vowel_at(i - 1) && vowel_at(i)) return Reason::VowelHiatus;

  // Consonant runs as [begin, end).
  for (std::size_t i = 0; i < n;) {
    if (vowel_at(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !vowel_at(j)) ++j;
    const std::size_t run = j - i;
    if (run >= 3) return Reason::ClusterTooLong;
    if (run == 2 && (i == 0 || j == n)) return Reason::EdgeCluster;
    i = j;
  }

  std::vector<Syllable> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!vowel_at(i)) continue;
    Syllable syl;
    syl.index = out.size();
    syl.nucleus = segments[i].grapheme;
    // A consonant right before a nucleus is always its onset: either it is
    // word-initial, the only consonant after the previous nucleus, or the
    // second of a coda + onset pair.
    if (i > 0 && !vowel_at(i - 1)) syl.onset = segments[i - 1].grapheme;
    // A consonant right after a nucleus is a coda when it is word-final or
    // followed by another consonant.
    if (i + 1 < n && !vowel_at(i + 1) && (i + 2 == n || !vowel_at(i + 2)))
      syl.coda = segments[i + 1].grapheme;
    out.push_back(syl);
  }

  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!out[k].coda) continue;
    const bool last = k + 1 == out.size();
    if (last) {
      if (!is_word_final_grapheme(*out[k].coda)) return Reason::BadWordFinal;
    } else if (!is_coda_grapheme(*out[k].coda)) {
      return Reason::BadCoda;
    }
  }
  return out;
}

/// True iff every lowered vowel has a uvular next to it, or in its own
/// syllable's onset or coda.
inline bool check_vowel_context(const std::vector<MappedSegment>& segments,
                                const std::vector<Syllable>& syllables) {
  std::size_t syllable = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!is_vowel(segments[i].grapheme)) continue;
    const std::size_t own = syllable++;
    if (!segments[i].lowered) continue;

    const bool before = i > 0 && is_uvular(segments[i - 1].grapheme);
    const bool after =
        i + 1 < segments.size() && is_uvular(segments[i + 1].grapheme);
    bool in_syllable = false;
    if (own < syllables.size()) {
      const Syllable& s = syllables[own];
      in_syllable = (s.onset && is_uvular(*s.onset)) ||
                    (s.coda && is_uvular(*s.coda));
    }
    if (!(before || after || in_syllable)) return false;
  }
  return true;
}

/// Eligibility over already-mapped segments.
inline ValidationResult validate_segments(std::vector<MappedSegment> segments) {
  auto parsed = syllabify(segments);
  if (auto* reason = std::get_if<Reason>(&parsed))
    return ValidationResult::reject(*reason);
  auto& syllables = std::get<std::vector<Syllable>>(parsed);
  if (!check_vowel_context(segments, syllables))
    return ValidationResult::reject(Reason::BadVowelContext);
  return {true, Reason::Ok, std::move(syllables), std::move(segments)};
}

/// Full eligibility test over tokenized phones.
inline ValidationResult validate(const std::vector<Phone>& phones) {
  if (phones.empty()) return ValidationResult::reject(Reason::Empty);

  std::vector<std::optional<MappedSegment>> mapped;
  mapped.reserve(phones.size());
  for (const Phone& p : phones) mapped.push_back(map_phone(p));

  auto vowel = [&](std::size_t i) {
    return i < mapped.size() && mapped[i] && is_vowel(mapped[i]->grapheme);
  };
  auto uvular = [&](std::size_t i) {
    return i < mapped.size() && mapped[i] && is_uvular(mapped[i]->grapheme);
  };

  std::vector<MappedSegment> segments;
  segments.reserve(phones.size());
  for (std::size_t i = 0; i < phones.size(); ++i) {
    if (mapped[i]) {
      segments.push_back(*mapped[i]);
      continue;
    }
    const Phone& p = phones[i];
    const bool plain_approximant =
        p.base == Base::VelarApproximant && !p.aspirated && !p.ejective;
    // Coda position before a uvular onset: V ɰ Q V.
    if (plain_approximant && i > 0 && vowel(i - 1) && uvular(i + 1) &&
        vowel(i + 2)) {
      segments.push_back(MappedSegment{Grapheme::Ll, false, p});
      continue;
    }
    return ValidationResult::reject(Reason::UnmappedPhone);
  }
  return validate_segments(std::move(segments));
}

/// Tokenizes and validates a raw pronunciation in one step; tokenizer
/// failures come back as UNMAPPED_PHONE or DIACRITIC.
inline ValidationResult evaluate(std::string_view raw_pron,
                                 DiacriticPolicy policy) {
  const std::string normalized = normalize(raw_pron);
  if (normalized.empty()) return ValidationResult::reject(Reason::Empty);
  const Tokenization tokens = tokenize(normalized, policy);
  if (!tokens.ok()) {
    return ValidationResult::reject(
        tokens.error->kind == TokenError::Kind::DiacriticPresent
            ? Reason::Diacritic
            : Reason::UnmappedPhone);
  }
  return validate(tokens.phones);
}

inline std::string syllabification_text(const std::vector<Syllable>& syllables) {
  std::string out;
  for (const Syllable& s : syllables) {
    if (!out.empty()) out += '.';
    out += s.text();
  }
  return out;
}

}  // namespace neolex
