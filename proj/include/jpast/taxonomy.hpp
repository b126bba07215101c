#ifndef JPAST_TAXONOMY_HPP
#define JPAST_TAXONOMY_HPP

// Error taxonomy: assigns each wrong prediction one category by diagnosing
// the mora-level edit between gold and predicted forms.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "jpast/classifier.hpp"
#include "jpast/conjugator.hpp"
#include "jpast/error.hpp"
#include "jpast/kana.hpp"
#include "jpast/metrics.hpp"
#include "jpast/verb_type.hpp"

namespace jpast {

enum class ErrorCategory : std::uint8_t {
  GeminationOmission,
  GeminationInsertion,
  StemAlternation,
  MorphemeBoundary,
  OverRegularization,
  VowelLength,
  Unknown,
};

inline constexpr std::size_t kErrorCategoryCount = 7;

inline constexpr std::array<ErrorCategory, kErrorCategoryCount> kAllErrorCategories = {
    ErrorCategory::GeminationOmission, ErrorCategory::GeminationInsertion,
    ErrorCategory::StemAlternation,    ErrorCategory::MorphemeBoundary,
    ErrorCategory::OverRegularization, ErrorCategory::VowelLength,
    ErrorCategory::Unknown};

inline const char* to_string(ErrorCategory c) {
  static constexpr std::array<const char*, kErrorCategoryCount> names = {
      "GeminationOmission", "GeminationInsertion", "StemAlternation", "MorphemeBoundary",
      "OverRegularization", "VowelLength",         "Unknown"};
  return names[static_cast<std::size_t>(c)];
}

constexpr bool is_gemination(ErrorCategory c) {
  return c == ErrorCategory::GeminationOmission || c == ErrorCategory::GeminationInsertion;
}

struct TaxonomyOptions {
  std::string unk_sentinel{kDefaultUnkSentinel};
};

namespace detail {

inline std::optional<ErrorCategory> gemination_error(const EditScript& script) {
  const auto changes = script.changes();
  if (changes.size() != 1) return std::nullopt;
  const auto& op = changes.front();
  if (op.kind == EditKind::Delete && op.from->is_sokuon) return ErrorCategory::GeminationOmission;
  if (op.kind == EditKind::Insert && op.to->is_sokuon) return ErrorCategory::GeminationInsertion;
  return std::nullopt;
}

/// One inserted or deleted bare-vowel mora that lengthens or shortens the
/// vowel of the mora before it. Inside a run of identical moras the edit may
/// be placed at the head of the run, so the following mora is checked too.
inline bool is_vowel_length_error(const EditScript& script, const KanaWord& gold,
                                  const KanaWord& predicted) {
  const auto changes = script.changes();
  if (changes.size() != 1) return false;
  const auto& op = changes.front();
  if (op.kind != EditKind::Insert && op.kind != EditKind::Delete) return false;
  const Mora& m = op.kind == EditKind::Insert ? *op.to : *op.from;
  if (m.onset != Onset::Zero) return false;
  const KanaWord& longer = op.kind == EditKind::Insert ? predicted : gold;
  const std::size_t at = op.kind == EditKind::Insert ? op.target_index : op.source_index;
  if (at > 0 && longer[at - 1].vowel == m.vowel) return true;
  return at + 1 < longer.size() && longer[at + 1] == m;
}

inline std::size_t common_prefix(const KanaWord& a, const KanaWord& b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return n;
}

inline bool starts_with(const KanaWord& word, const KanaWord& prefix) {
  return common_prefix(word, prefix) == prefix.size();
}

inline bool is_past_suffix(const Mora& m) { return m.surface == "た" || m.surface == "だ"; }

/// Stem-relative diagnosis for edits that no single-edit rule explains.
/// The stem is the lemma minus the moras its rule rewrites.
inline ErrorCategory structural_error(const KanaWord& lemma, VerbType vtype, const KanaWord& gold,
                                      const KanaWord& predicted) {
  const KanaWord stem = stem_of(lemma, vtype);
  if (common_prefix(gold, predicted) < stem.size()) return ErrorCategory::StemAlternation;

  // Predicted keeps the stem. Without a past suffix the ending was never
  // formed; with one, check what sits between stem and suffix.
  const KanaWord tail = predicted.slice(stem.size());
  if (tail.empty() || !is_past_suffix(tail.back())) return ErrorCategory::StemAlternation;
  const KanaWord middle = tail.drop_back(1);
  const KanaWord gold_middle = gold.slice(stem.size()).drop_back(1);
  const KanaWord lemma_ending = lemma.slice(stem.size());
  if (middle == gold_middle || middle.empty() || starts_with(middle, lemma_ending))
    return ErrorCategory::MorphemeBoundary;
  return ErrorCategory::StemAlternation;
}

}  // namespace detail

/// Category of a wrong prediction. First match wins:
///   1. non-hiragana text or the UNK sentinel          -> Unknown
///   2. the over-regularized form of a Type 4 lemma     -> OverRegularization
///   3. exactly one っ deleted / inserted               -> GeminationOmission / Insertion
///   4. exactly one vowel mora lengthening its neighbour -> VowelLength
///   5. stem kept, suffix attached at the wrong place   -> MorphemeBoundary
///   6. divergence inside the stem, or the ending never
///      formed / formed with the wrong alternation      -> StemAlternation
/// For 4-2 verbs rule 3 is tried before rule 2, so a missing っ there counts
/// as gemination; for 4-1 and 4-3 it counts as over-regularization.
inline ErrorCategory classify_error(const KanaWord& lemma, const KanaWord& gold,
                                    std::string_view predicted, VerbType vtype,
                                    const TaxonomyOptions& options = {}) {
  if (predicted == gold.str())
    throw ContractViolation("classify_error called on a correct prediction: " + gold.str());
  if ((!options.unk_sentinel.empty() && predicted.find(options.unk_sentinel) != std::string_view::npos) ||
      !is_kana_word(predicted))
    return ErrorCategory::Unknown;

  const KanaWord pred = segment_moras(predicted);
  const EditScript script = diff(gold, pred);

  const auto over_regularized = [&] {
    const auto form = over_regularized_form(lemma, vtype);
    return form && *form == pred;
  };
  if (vtype == VerbType::T4_2_EGemination) {
    if (auto g = detail::gemination_error(script)) return *g;
    if (over_regularized()) return ErrorCategory::OverRegularization;
  } else {
    if (over_regularized()) return ErrorCategory::OverRegularization;
    if (auto g = detail::gemination_error(script)) return *g;
  }
  if (detail::is_vowel_length_error(script, gold, pred)) return ErrorCategory::VowelLength;
  return detail::structural_error(lemma, vtype, gold, pred);
}

/// Same, with the verb type read off the (lemma, gold) pair.
inline ErrorCategory classify_error(const KanaWord& lemma, const KanaWord& gold,
                                    std::string_view predicted,
                                    const TaxonomyOptions& options = {}) {
  return classify_error(lemma, gold, predicted, infer_type(lemma, gold), options);
}

struct ClassifiedError {
  KanaWord lemma;
  KanaWord gold;
  std::string predicted;
  VerbType vtype;
  ErrorCategory category;
};

/// Classifies every wrong record; correct ones are skipped.
inline std::vector<ClassifiedError> classify_errors(std::span<const PredictionRecord> preds,
                                                    const TaxonomyOptions& options = {}) {
  std::vector<ClassifiedError> out;
  for (const auto& p : preds) {
    if (p.correct()) continue;
    out.push_back({p.lemma, p.gold, p.predicted, p.vtype,
                   classify_error(p.lemma, p.gold, p.predicted, p.vtype, options)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Category x verb type table

struct TaxonomyReport {
  std::array<std::array<std::size_t, kVerbTypeCount>, kErrorCategoryCount> counts{};
  std::size_t total = 0;

  std::size_t count(ErrorCategory c, VerbType t) const {
    return counts[static_cast<std::size_t>(c)][index_of(t)];
  }

  std::size_t category_total(ErrorCategory c) const {
    std::size_t n = 0;
    for (auto x : counts[static_cast<std::size_t>(c)]) n += x;
    return n;
  }

  std::size_t gemination(VerbType t) const {
    return count(ErrorCategory::GeminationOmission, t) +
           count(ErrorCategory::GeminationInsertion, t);
  }

  std::size_t gemination_total() const {
    return category_total(ErrorCategory::GeminationOmission) +
           category_total(ErrorCategory::GeminationInsertion);
  }

  std::size_t type_total(VerbType t) const {
    std::size_t n = 0;
    for (auto c : kAllErrorCategories) n += count(c, t);
    return n;
  }

  /// Verb types with the most errors of category c; ties all listed, empty
  /// when the category never occurs.
  std::vector<VerbType> dominant_sources(ErrorCategory c) const {
    return argmax_types([&](VerbType t) { return count(c, t); });
  }

  std::vector<VerbType> gemination_dominant_sources() const {
    return argmax_types([&](VerbType t) { return gemination(t); });
  }

  /// Most frequent error kind for verb type t, with the two gemination
  /// categories rolled up into "Gemination".
  std::vector<std::string> dominant_error_types(VerbType t) const {
    std::vector<std::pair<std::string, std::size_t>> tallies = {{"Gemination", gemination(t)}};
    for (auto c : kAllErrorCategories)
      if (!is_gemination(c)) tallies.emplace_back(c == ErrorCategory::Unknown ? "UNK" : to_string(c), count(c, t));
    std::size_t best = 0;
    for (const auto& [_, n] : tallies) best = std::max(best, n);
    std::vector<std::string> out;
    if (best == 0) return out;
    for (const auto& [name, n] : tallies)
      if (n == best) out.push_back(name);
    return out;
  }

private:
  template <typename CountFn>
  std::vector<VerbType> argmax_types(CountFn fn) const {
    std::size_t best = 0;
    for (auto t : kAllVerbTypes) best = std::max(best, fn(t));
    std::vector<VerbType> out;
    if (best == 0) return out;
    for (auto t : kAllVerbTypes)
      if (fn(t) == best) out.push_back(t);
    return out;
  }
};

inline TaxonomyReport taxonomy_report(std::span<const ClassifiedError> errors) {
  TaxonomyReport rep;
  for (const auto& e : errors) {
    ++rep.counts[static_cast<std::size_t>(e.category)][index_of(e.vtype)];
    ++rep.total;
  }
  return rep;
}

namespace detail {

inline std::string join_labels(const std::vector<VerbType>& types) {
  if (types.empty()) return "—";
  std::string out;
  for (auto t : types) {
    if (!out.empty()) out += ", ";
    out += std::string("Type ") + label(t);
  }
  return out;
}

inline std::string join(const std::vector<std::string>& xs, const char* sep) {
  if (xs.empty()) return "—";
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

struct CategoryInfo {
  const char* description;
  const char* orthography;
};

inline CategoryInfo category_info(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::GeminationOmission: return {"small っ missing", "consonant doubling"};
    case ErrorCategory::GeminationInsertion: return {"small っ added", "consonant doubling"};
    case ErrorCategory::StemAlternation: return {"stem-final change not applied or wrong", "suffix-conditioned alternation"};
    case ErrorCategory::MorphemeBoundary: return {"suffix attached at the wrong point", "boundary detection"};
    case ErrorCategory::OverRegularization: return {"irregular verb given the majority ending", "pattern generalization"};
    case ErrorCategory::VowelLength: return {"vowel mora added or dropped", "moraic timing"};
    case ErrorCategory::Unknown: return {"UNK symbol or non-kana output", "—"};
  }
  return {"", ""};
}

}  // namespace detail

inline std::string to_markdown(const TaxonomyReport& rep) {
  std::ostringstream out;
  out << "## Errors by verb type\n\n";
  out << "| Verb Type | # Errors | Dominant Error Type |\n|---|---:|---|\n";
  for (auto t : kDatasetVerbTypes)
    out << "| " << label(t) << " | " << rep.type_total(t) << " | "
        << detail::join(rep.dominant_error_types(t), " / ") << " |\n";
  out << "\n## Error taxonomy\n\n";
  out << "| Error Type | Description | Orthographic Property | Count | Dominant Source |\n";
  out << "|---|---|---|---:|---|\n";
  out << "| Gemination (rollup) | small っ missing or added | consonant doubling | "
      << rep.gemination_total() << " | " << detail::join_labels(rep.gemination_dominant_sources())
      << " |\n";
  for (auto c : kAllErrorCategories) {
    const auto info = detail::category_info(c);
    out << "| " << to_string(c) << " | " << info.description << " | " << info.orthography
        << " | " << rep.category_total(c) << " | " << detail::join_labels(rep.dominant_sources(c))
        << " |\n";
  }
  out << "\nTotal errors: " << rep.total << "\n";
  return out.str();
}

inline nlohmann::json to_json(const TaxonomyReport& rep) {
  auto type_names = [](const std::vector<VerbType>& ts) {
    nlohmann::json a = nlohmann::json::array();
    for (auto t : ts) a.push_back(to_string(t));
    return a;
  };
  nlohmann::json categories = nlohmann::json::object();
  for (auto c : kAllErrorCategories) {
    nlohmann::json by_type = nlohmann::json::object();
    for (auto t : kDatasetVerbTypes) by_type[to_string(t)] = rep.count(c, t);
    categories[to_string(c)] = {{"count", rep.category_total(c)},
                                {"by_type", by_type},
                                {"dominant_source", type_names(rep.dominant_sources(c))}};
  }
  nlohmann::json gem_by_type = nlohmann::json::object();
  nlohmann::json types = nlohmann::json::object();
  for (auto t : kDatasetVerbTypes) {
    gem_by_type[to_string(t)] = rep.gemination(t);
    types[to_string(t)] = {{"errors", rep.type_total(t)},
                           {"dominant_error_type", rep.dominant_error_types(t)}};
  }
  return {
      {"total", rep.total},
      {"categories", categories},
      {"gemination_rollup",
       {{"count", rep.gemination_total()},
        {"by_type", gem_by_type},
        {"dominant_source", type_names(rep.gemination_dominant_sources())}}},
      {"verb_types", types},
  };
}

}  // namespace jpast

#endif  // JPAST_TAXONOMY_HPP
