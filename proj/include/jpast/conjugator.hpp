#ifndef JPAST_CONJUGATOR_HPP
#define JPAST_CONJUGATOR_HPP

// Rule-based past-tense formation. This is the gold-form oracle for
// generation, validation and the over-regularization test.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "jpast/error.hpp"
#include "jpast/kana.hpp"
#include "jpast/verb_type.hpp"

namespace jpast {

/// Replace a verb-final mora with a past-tense ending.
struct ConjugationRule {
  std::string_view final_mora;
  std::string_view replacement;
};

/// The nine Godan endings.
inline constexpr std::array<ConjugationRule, 9> kGodanRules = {{
    {"う", "った"},
    {"く", "いた"},
    {"ぐ", "いだ"},
    {"す", "した"},
    {"つ", "った"},
    {"ぬ", "んだ"},
    {"ぶ", "んだ"},
    {"む", "んだ"},
    {"る", "った"},
}};

inline constexpr ConjugationRule kIchidanRule{"る", "た"};
inline constexpr ConjugationRule kGeminatingRule{"る", "った"};

inline const ConjugationRule* find_godan_rule(const Mora& final_mora) {
  for (const auto& rule : kGodanRules)
    if (rule.final_mora == final_mora.surface) return &rule;
  return nullptr;
}

/// する / くる or a compound ending in one of them.
inline bool is_suru_kuru(const KanaWord& lemma) {
  const auto s = lemma.str();
  return s.ends_with("する") || s.ends_with("くる");
}

/// いく or a compound ending in it.
inline bool is_iku(const KanaWord& lemma) { return lemma.str().ends_with("いく"); }

/// Number of lemma-final moras the past-tense rule rewrites.
inline std::size_t ending_length(VerbType t) {
  return t == VerbType::T3_CanonicalIrregular || t == VerbType::T4_3_Localized ? 2 : 1;
}

/// The lemma minus the moras its rule rewrites.
inline KanaWord stem_of(const KanaWord& lemma, VerbType t) {
  return lemma.drop_back(ending_length(t));
}

namespace detail {

inline KanaWord replace_final(const KanaWord& lemma, std::size_t drop, std::string_view with) {
  return lemma.drop_back(drop) + segment_moras(with);
}

inline void require_stem(const KanaWord& lemma, std::size_t drop, VerbType t) {
  if (lemma.size() <= drop)
    throw RejectedInput("empty stem: " + lemma.str() + " as type " + to_string(t));
}

inline void require_final(const KanaWord& lemma, std::string_view final_mora, VerbType t) {
  if (lemma.empty() || lemma.back().surface != final_mora)
    throw RuleDomainError(lemma.str() + " must end in " + std::string(final_mora) +
                          " for type " + to_string(t));
}

}  // namespace detail

/// Past tense of lemma under vtype. T4_1 needs an /i/ mora before る and
/// T4_2 an /e/ mora; anything else is outside that type's domain.
inline KanaWord conjugate_past(const KanaWord& lemma, VerbType vtype) {
  if (lemma.empty()) throw RejectedInput("empty lemma");
  switch (vtype) {
    case VerbType::T1_Godan: {
      const auto* rule = find_godan_rule(lemma.back());
      if (!rule)
        throw RuleDomainError(lemma.str() + ": " + lemma.back().surface +
                              " is not a Godan final mora");
      detail::require_stem(lemma, 1, vtype);
      return detail::replace_final(lemma, 1, rule->replacement);
    }
    case VerbType::T2_Ichidan:
      detail::require_final(lemma, kIchidanRule.final_mora, vtype);
      detail::require_stem(lemma, 1, vtype);
      return detail::replace_final(lemma, 1, kIchidanRule.replacement);
    case VerbType::T4_1_IGemination:
    case VerbType::T4_2_EGemination: {
      detail::require_final(lemma, kGeminatingRule.final_mora, vtype);
      detail::require_stem(lemma, 1, vtype);
      const Vowel want = vtype == VerbType::T4_1_IGemination ? Vowel::I : Vowel::E;
      const Vowel got = lemma[lemma.size() - 2].vowel;
      if (got != want)
        throw RuleDomainError(lemma.str() + ": mora before る has vowel /" + to_string(got) +
                              "/, type " + to_string(vtype) + " needs /" + to_string(want) + "/");
      return detail::replace_final(lemma, 1, kGeminatingRule.replacement);
    }
    case VerbType::T4_3_Localized:
      if (!is_iku(lemma)) throw RuleDomainError(lemma.str() + " is not いく or an いく compound");
      return detail::replace_final(lemma, 1, "った");
    case VerbType::T3_CanonicalIrregular: {
      const auto s = lemma.str();
      if (s.ends_with("する")) return detail::replace_final(lemma, 2, "した");
      if (s.ends_with("くる")) return detail::replace_final(lemma, 2, "きた");
      throw RuleDomainError(s + " is not する/くる or a compound of them");
    }
  }
  throw ContractViolation("unknown verb type");
}

/// The form a learner that follows the majority pattern would produce for a
/// Type 4 verb: Ichidan treatment for 4-1/4-2, plain Godan く→いた for 4-3.
/// Regular types have no over-regularized form.
inline std::optional<KanaWord> over_regularized_form(const KanaWord& lemma, VerbType true_type) {
  if (lemma.size() < 2) return std::nullopt;
  switch (true_type) {
    case VerbType::T4_1_IGemination:
    case VerbType::T4_2_EGemination:
      if (lemma.back().surface != kIchidanRule.final_mora) return std::nullopt;
      return detail::replace_final(lemma, 1, kIchidanRule.replacement);
    case VerbType::T4_3_Localized: {
      const auto* rule = find_godan_rule(lemma.back());
      if (!rule) return std::nullopt;
      return detail::replace_final(lemma, 1, rule->replacement);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace jpast

#endif  // JPAST_CONJUGATOR_HPP
