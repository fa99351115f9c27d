#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "neolex/neolex.hpp"
#include "test_util.hpp"

namespace {

using neolex::Base;
using neolex::DiacriticPolicy;
using neolex::normalize;
using neolex::Phone;
using neolex::TokenError;
using neolex::tokenize;

std::vector<Base> bases(const std::vector<Phone>& phones) {
  std::vector<Base> out;
  for (const auto& p : phones) out.push_back(p.base);
  return out;
}

std::string joined_raw(const std::vector<Phone>& phones) {
  std::string out;
  for (const auto& p : phones) out += p.raw;
  return out;
}

TEST(Normalize, StripsDelimitersAndStress) {
  EXPECT_EQ(normalize("/ˈpam.pa/"), "pampa");
}

TEST(Normalize, RemovesSegmentSpacing) {
  EXPECT_EQ(normalize("tʃ u n k a"), "tʃunka");
}

TEST(Normalize, EmptyStaysEmpty) {
  EXPECT_EQ(normalize(""), "");
  EXPECT_EQ(normalize("  / /  "), "");
}

TEST(Normalize, BracketsAndSecondaryStress) {
  EXPECT_EQ(normalize("[ˌwakˈtʃa]"), "waktʃa");
}

TEST(Normalize, DecomposesAndKeepsTieBar) {
  EXPECT_EQ(normalize("māma"), "māma");
  EXPECT_EQ(normalize("t͡ʃa"), "t͡ʃa");
  EXPECT_EQ(normalize("ña"), "ña");
}

TEST(Tokenize, EjectiveAffricateWithTieBar) {
  auto t = tokenize(normalize("t͡ʃʼaska"));
  ASSERT_TRUE(t.ok());
  ASSERT_EQ(t.phones.size(), 5u);
  EXPECT_EQ(bases(t.phones), (std::vector<Base>{Base::Affricate, Base::A, Base::S,
                                                Base::K, Base::A}));
  EXPECT_TRUE(t.phones[0].ejective);
  EXPECT_FALSE(t.phones[0].aspirated);
  for (std::size_t i = 1; i < t.phones.size(); ++i) {
    EXPECT_FALSE(t.phones[i].ejective);
    EXPECT_FALSE(t.phones[i].aspirated);
  }
}

TEST(Tokenize, AspiratedStop) {
  auto t = tokenize(normalize("pʰataj"));
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(bases(t.phones),
            (std::vector<Base>{Base::P, Base::A, Base::T, Base::A, Base::J}));
  EXPECT_TRUE(t.phones[0].aspirated);
  EXPECT_FALSE(t.phones[0].ejective);
}

TEST(Tokenize, MacronRejected) {
  auto t = tokenize(normalize("māma"), DiacriticPolicy::Reject);
  ASSERT_FALSE(t.ok());
  EXPECT_EQ(t.error->kind, TokenError::Kind::DiacriticPresent);
  EXPECT_EQ(t.error->position, 2u);
  EXPECT_TRUE(t.phones.empty());
}

TEST(Tokenize, MacronStripped) {
  auto t = tokenize(normalize("māma"), DiacriticPolicy::Strip);
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(joined_raw(t.phones), "mama");
}

TEST(Tokenize, VoicedAffricateIsUnknownAtZero) {
  auto t = tokenize(normalize("dʒas"));
  ASSERT_FALSE(t.ok());
  EXPECT_EQ(t.error->kind, TokenError::Kind::UnknownSymbol);
  EXPECT_EQ(t.error->position, 0u);
}

TEST(Tokenize, SymbolTableHasNoVoicedAffricate) {
  for (const auto& entry : neolex::detail::kSymbolTable) {
    EXPECT_NE(entry.sequence, U"dʒ");
    EXPECT_NE(entry.sequence, U"d");
    EXPECT_NE(entry.sequence, U"ʒ");
  }
}

TEST(Tokenize, ForeignSymbolsAreUnknown) {
  for (const char* s : {"g", "d", "b", "z", "f", "v", "ʒ", "θ",
                        "ð", "ŋ", "ɹ", "y", "c"}) {
    auto t = tokenize(normalize(s), DiacriticPolicy::Strip);
    ASSERT_FALSE(t.ok()) << s;
    EXPECT_EQ(t.error->kind, TokenError::Kind::UnknownSymbol) << s;
  }
}

TEST(Tokenize, UnknownPositionCountsCodePoints) {
  auto t = tokenize(normalize("ʃaʃag"));
  ASSERT_FALSE(t.ok());
  EXPECT_EQ(t.error->position, 4u);
}

TEST(Tokenize, AffricateUnification) {
  const Base expected = Base::Affricate;
  for (const char* s : {"t͡ʃ", "t͜ʃ", "tʃ", "ʧ",
                        "č", "č"}) {
    auto t = tokenize(normalize(s));
    ASSERT_TRUE(t.ok()) << s;
    ASSERT_EQ(t.phones.size(), 1u) << s;
    EXPECT_EQ(t.phones[0].base, expected) << s;
  }
}

TEST(Tokenize, AlternativeNotations) {
  auto sh = tokenize(normalize("š"));
  ASSERT_TRUE(sh.ok());
  ASSERT_EQ(sh.phones.size(), 1u);
  EXPECT_EQ(sh.phones[0].base, Base::Postalveolar);

  auto k = tokenize(normalize("k̄a"));
  ASSERT_TRUE(k.ok());
  ASSERT_EQ(k.phones.size(), 2u);
  EXPECT_EQ(k.phones[0].base, Base::K);

  auto ph = tokenize(normalize("pφa"));
  ASSERT_TRUE(ph.ok());
  ASSERT_EQ(ph.phones.size(), 2u);
  EXPECT_EQ(ph.phones[0].base, Base::P);
  EXPECT_TRUE(ph.phones[0].aspirated);
}

TEST(Tokenize, MacronOnOtherLettersIsADiacritic) {
  auto t = tokenize(normalize("kā"));
  ASSERT_FALSE(t.ok());
  EXPECT_EQ(t.error->kind, TokenError::Kind::DiacriticPresent);
}

TEST(Tokenize, ApostropheAfterStopIsEjective) {
  for (const char* s : {"p'a", "t'a", "k'a", "q'a", "tʃ'a", "ʧ'a"}) {
    auto t = tokenize(normalize(s));
    ASSERT_TRUE(t.ok()) << s;
    ASSERT_EQ(t.phones.size(), 2u) << s;
    EXPECT_TRUE(t.phones[0].ejective) << s;
  }
}

TEST(Tokenize, ApostropheAfterNonStopIsUnknown) {
  auto t = tokenize(normalize("s'a"));
  ASSERT_FALSE(t.ok());
  EXPECT_EQ(t.error->kind, TokenError::Kind::UnknownSymbol);
  EXPECT_EQ(t.error->position, 1u);
}

TEST(Tokenize, ModifierLetterApostropheAttachesToAnyPhone) {
  auto t = tokenize(normalize("sʼa"));
  ASSERT_TRUE(t.ok());
  EXPECT_TRUE(t.phones[0].ejective);
}

TEST(Tokenize, NeverBothAspiratedAndEjective) {
  auto t = tokenize(normalize("kʰʼa"));
  ASSERT_FALSE(t.ok());
  EXPECT_EQ(t.error->kind, TokenError::Kind::UnknownSymbol);
  EXPECT_EQ(t.error->position, 2u);
}

TEST(Tokenize, StrayTieBarIsUnknown) {
  auto t = tokenize(normalize("a͡"), DiacriticPolicy::Strip);
  ASSERT_FALSE(t.ok());
  EXPECT_EQ(t.error->kind, TokenError::Kind::UnknownSymbol);
  EXPECT_EQ(t.error->position, 1u);
}

TEST(Tokenize, LengthAndToneUnderBothPolicies) {
  for (const char* s : {"maː", "ma˥˩", "má", "ma55",
                        "mã"}) {
    auto reject = tokenize(normalize(s), DiacriticPolicy::Reject);
    ASSERT_FALSE(reject.ok()) << s;
    EXPECT_EQ(reject.error->kind, TokenError::Kind::DiacriticPresent) << s;
    EXPECT_EQ(reject.error->position, 2u) << s;

    auto strip = tokenize(normalize(s), DiacriticPolicy::Strip);
    ASSERT_TRUE(strip.ok()) << s;
    EXPECT_EQ(joined_raw(strip.phones), "ma") << s;
  }
}

TEST(Tokenize, EmptyInputGivesNoPhones) {
  auto t = tokenize("");
  EXPECT_TRUE(t.ok());
  EXPECT_TRUE(t.phones.empty());
}

// Property tests over random strings drawn from a mixed alphabet of
// recognized symbols, modifiers, diacritics and foreign letters.

std::string random_input(std::mt19937& rng) {
  static const std::vector<std::string> kPieces = {
      "a", "ɑ", "i", "ɪ", "e", "ɛ", "u", "ʊ", "o", "ɔ",
      "t", "ʃ", "t͡ʃ", "ʧ", "č", "s", "š", "h",
      "k", "k̄", "x", "l", "ʎ", "m", "n", "ɲ", "p", "β",
      "ɸ", "φ", "q", "ɢ", "χ", "r", "w", "j", "ɰ",
      "ʰ", "ʼ", "'", "ː", "́", "̀", "˥", "3",
      "g", "d", "ŋ", "͡"};
  std::uniform_int_distribution<std::size_t> len(0, 8);
  std::uniform_int_distribution<std::size_t> pick(0, kPieces.size() - 1);
  std::string out;
  for (std::size_t n = len(rng); n > 0; --n) out += kPieces[pick(rng)];
  return out;
}

std::string strip_policy_marks(const std::string& normalized) {
  std::u32string in = neolex::unicode::to_u32(normalized);
  std::u32string out;
  for (char32_t c : in) {
    const bool symbol_mark =
        !out.empty() && neolex::detail::is_symbol_mark(out.back(), c);
    if (symbol_mark || !neolex::detail::is_policy_mark(c)) out.push_back(c);
  }
  return neolex::unicode::to_utf8(out);
}

TEST(TokenizeProperties, ReconstructionUnderBothPolicies) {
  std::mt19937 rng(20260101);
  int checked = 0;
  for (int n = 0; n < 5000; ++n) {
    const std::string s = normalize(random_input(rng));
    auto reject = tokenize(s, DiacriticPolicy::Reject);
    if (reject.ok()) {
      EXPECT_EQ(joined_raw(reject.phones), s);
      ++checked;
    }
    auto strip = tokenize(s, DiacriticPolicy::Strip);
    if (strip.ok()) {
      EXPECT_EQ(joined_raw(strip.phones), strip_policy_marks(s));
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(TokenizeProperties, Deterministic) {
  std::mt19937 rng(7);
  for (int n = 0; n < 2000; ++n) {
    const std::string s = normalize(random_input(rng));
    for (auto policy : {DiacriticPolicy::Reject, DiacriticPolicy::Strip}) {
      auto a = tokenize(s, policy);
      auto b = tokenize(s, policy);
      EXPECT_EQ(a.phones, b.phones);
      EXPECT_EQ(a.error, b.error);
    }
  }
}

TEST(TokenizeProperties, StripAcceptsEverythingRejectAccepts) {
  std::mt19937 rng(99);
  for (int n = 0; n < 5000; ++n) {
    const std::string s = normalize(random_input(rng));
    auto reject = tokenize(s, DiacriticPolicy::Reject);
    if (!reject.ok()) continue;
    auto strip = tokenize(s, DiacriticPolicy::Strip);
    ASSERT_TRUE(strip.ok()) << s;
    EXPECT_EQ(strip.phones, reject.phones) << s;
  }
}

TEST(TokenizeProperties, NoPhoneIsBothAspiratedAndEjective) {
  std::mt19937 rng(3);
  for (int n = 0; n < 5000; ++n) {
    auto t = tokenize(normalize(random_input(rng)), DiacriticPolicy::Strip);
    for (const auto& p : t.phones) EXPECT_FALSE(p.aspirated && p.ejective);
  }
}

}  // namespace
