#ifndef JPAST_CLASSIFIER_HPP
#define JPAST_CLASSIFIER_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "jpast/conjugator.hpp"
#include "jpast/error.hpp"
#include "jpast/kana.hpp"
#include "jpast/verb_type.hpp"

namespace jpast {

struct InflectionPair {
  KanaWord lemma;
  KanaWord past;
  VerbType vtype;

  friend bool operator==(const InflectionPair&, const InflectionPair&) = default;
};

namespace detail {

inline bool conjugates_to(const KanaWord& lemma, VerbType t, const KanaWord& past) {
  try {
    return conjugate_past(lemma, t) == past;
  } catch (const Error&) {
    return false;
  }
}

/// Names the type whose rule output is closest to past.
inline std::string nearest_rule(const KanaWord& lemma, const KanaWord& past) {
  std::string best = "no rule applies to final mora " +
                     (lemma.empty() ? std::string("(none)") : lemma.back().surface);
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (auto t : kAllVerbTypes) {
    try {
      const auto expected = conjugate_past(lemma, t);
      const auto cost = diff(expected, past).cost();
      if (cost < best_cost) {
        best_cost = cost;
        best = std::string("nearest rule ") + to_string(t) + " expects " + expected.str() +
               " (" + std::to_string(cost) + " mora edit" + (cost == 1 ? "" : "s") + ")";
      }
    } catch (const Error&) {
    }
  }
  return best;
}

}  // namespace detail

/// Orthographic verb type of a (lemma, past) pair. Checked in order:
///   1. する/くる compounds whose past is した/きた   -> T3
///   2. いく compounds with past ...いった            -> T4_3
///   3. る-final, past = stem + た                   -> T2
///   4. る-final, past = stem + った: pre-る vowel /i/ -> T4_1, /e/ -> T4_2, else T1
///   5. any other Godan ending that matches           -> T1
/// Throws UnclassifiableError when nothing matches.
inline VerbType infer_type(const KanaWord& lemma, const KanaWord& past) {
  if (lemma.empty() || past.empty())
    throw UnclassifiableError(lemma.str(), past.str(), "empty word");

  if (is_suru_kuru(lemma) && detail::conjugates_to(lemma, VerbType::T3_CanonicalIrregular, past))
    return VerbType::T3_CanonicalIrregular;

  if (is_iku(lemma) && detail::conjugates_to(lemma, VerbType::T4_3_Localized, past))
    return VerbType::T4_3_Localized;

  const auto& final_mora = lemma.back().surface;
  if (final_mora == "る" && lemma.size() >= 2) {
    const auto stem = lemma.drop_back(1);
    if (past == stem + "た"_kana) return VerbType::T2_Ichidan;
    if (past == stem + "った"_kana) {
      switch (stem.back().vowel) {
        case Vowel::I: return VerbType::T4_1_IGemination;
        case Vowel::E: return VerbType::T4_2_EGemination;
        default: return VerbType::T1_Godan;
      }
    }
  }

  if (detail::conjugates_to(lemma, VerbType::T1_Godan, past)) return VerbType::T1_Godan;

  throw UnclassifiableError(lemma.str(), past.str(), detail::nearest_rule(lemma, past));
}

struct RowError {
  std::size_t row;  // 0-based input index
  std::string message;
};

struct Classification {
  std::vector<InflectionPair> pairs;
  std::vector<RowError> errors;
};

/// Labels every pair; failures go to errors with their row index. Nothing
/// is dropped silently.
inline Classification classify_dataset(
    const std::vector<std::pair<KanaWord, KanaWord>>& rows) {
  Classification out;
  out.pairs.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      out.pairs.push_back({rows[i].first, rows[i].second, infer_type(rows[i].first, rows[i].second)});
    } catch (const UnclassifiableError& e) {
      out.errors.push_back({i, e.what()});
    }
  }
  return out;
}

}  // namespace jpast

#endif  // JPAST_CLASSIFIER_HPP
