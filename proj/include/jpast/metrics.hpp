#ifndef JPAST_METRICS_HPP
#define JPAST_METRICS_HPP

// Exact-match accuracy, per-type subgroup accuracy, error and data shares,
// disparity ratios and relative error reduction.
//
// For a subgroup g over a prediction set with E > 0 total errors:
//   data_share_g  = n_g / N
//   error_share_g = errors_g / E
//   disparity_g   = error_share_g / data_share_g
// A disparity above 1 means g carries more than its share of the errors.

#include <nlohmann/json.hpp>

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jpast/dataset.hpp"
#include "jpast/error.hpp"
#include "jpast/kana.hpp"
#include "jpast/ratio.hpp"
#include "jpast/verb_type.hpp"

namespace jpast {

/// Placeholder a neural model emits for out-of-vocabulary characters.
inline constexpr std::string_view kDefaultUnkSentinel = "⟨unk⟩";

struct PredictionRecord {
  KanaWord lemma;
  KanaWord gold;
  std::string predicted;  // free text; may hold the UNK sentinel
  VerbType vtype;

  bool correct() const { return predicted == gold.str(); }
};

inline Ratio exact_match_accuracy(std::span<const PredictionRecord> preds) {
  if (preds.empty()) throw ConfigError("accuracy of an empty prediction set is undefined");
  std::int64_t hits = 0;
  for (const auto& p : preds) hits += p.correct() ? 1 : 0;
  return Ratio(hits, static_cast<std::int64_t>(preds.size()));
}

/// error_share / data_share, undefined when data_share is 0.
inline std::optional<Ratio> disparity_ratio(const Ratio& error_share, const Ratio& data_share) {
  if (data_share == Ratio(0)) return std::nullopt;
  return error_share / data_share;
}

inline std::optional<double> disparity_ratio(double error_share, double data_share) {
  if (data_share == 0.0) return std::nullopt;
  return error_share / data_share;
}

/// Share of the baseline error mass (1 - accuracy) removed by the ablation.
/// Undefined for a perfect baseline.
inline std::optional<Ratio> error_reduction(const Ratio& baseline_acc, const Ratio& ablated_acc) {
  const Ratio baseline_err = 1 - baseline_acc;
  if (baseline_err == Ratio(0)) return std::nullopt;
  return (baseline_err - (1 - ablated_acc)) / baseline_err;
}

inline std::optional<double> error_reduction(double baseline_acc, double ablated_acc) {
  const double baseline_err = 1.0 - baseline_acc;
  if (baseline_err == 0.0) return std::nullopt;
  return (baseline_err - (1.0 - ablated_acc)) / baseline_err;
}

// ---------------------------------------------------------------------------
// Subgroup report

/// Per-type item and error counts. merge() is associative and commutative,
/// so a report can be built from partitions in any order.
struct SubgroupCounts {
  std::array<std::size_t, kVerbTypeCount> items{};
  std::array<std::size_t, kVerbTypeCount> errors{};

  void add(const PredictionRecord& p) {
    ++items[index_of(p.vtype)];
    if (!p.correct()) ++errors[index_of(p.vtype)];
  }

  SubgroupCounts& merge(const SubgroupCounts& other) {
    for (std::size_t i = 0; i < kVerbTypeCount; ++i) {
      items[i] += other.items[i];
      errors[i] += other.errors[i];
    }
    return *this;
  }

  std::size_t total_items() const {
    std::size_t n = 0;
    for (auto x : items) n += x;
    return n;
  }

  std::size_t total_errors() const {
    std::size_t n = 0;
    for (auto x : errors) n += x;
    return n;
  }

  friend bool operator==(const SubgroupCounts&, const SubgroupCounts&) = default;
};

inline SubgroupCounts count_subgroups(std::span<const PredictionRecord> preds) {
  SubgroupCounts c;
  for (const auto& p : preds) c.add(p);
  return c;
}

struct SubgroupRow {
  std::string name;   // "T1", ..., or "T4" for the rollup
  std::string label;  // "1", "4-2", "4"
  std::size_t n = 0;
  std::size_t errors = 0;
  Ratio data_share{0};
  Ratio error_share{0};
  std::optional<Ratio> accuracy;         // undefined when n == 0
  std::optional<Ratio> disparity_ratio;  // undefined when n == 0 or no errors at all
};

struct SubgroupReport {
  std::vector<SubgroupRow> rows;  // T1, T2, T4_1, T4_2, T4_3
  SubgroupRow type4;              // rollup of the three subtypes
  std::size_t total = 0;
  std::size_t total_errors = 0;
  Ratio accuracy{0};

  const SubgroupRow& row(VerbType t) const {
    for (const auto& r : rows)
      if (r.name == to_string(t)) return r;
    throw ContractViolation(std::string("no subgroup row for ") + to_string(t));
  }
};

namespace detail {

inline SubgroupRow make_row(std::string name, std::string label, std::size_t n,
                            std::size_t errors, std::size_t total, std::size_t total_errors) {
  SubgroupRow r;
  r.name = std::move(name);
  r.label = std::move(label);
  r.n = n;
  r.errors = errors;
  r.data_share = Ratio(static_cast<std::int64_t>(n), static_cast<std::int64_t>(total));
  r.error_share = total_errors ? Ratio(static_cast<std::int64_t>(errors),
                                       static_cast<std::int64_t>(total_errors))
                               : Ratio(0);
  if (n) r.accuracy = Ratio(static_cast<std::int64_t>(n - errors), static_cast<std::int64_t>(n));
  if (total_errors) r.disparity_ratio = jpast::disparity_ratio(r.error_share, r.data_share);
  return r;
}

}  // namespace detail

inline SubgroupReport subgroup_report(const SubgroupCounts& c) {
  const std::size_t total = c.total_items();
  if (total == 0) throw ConfigError("subgroup report of an empty prediction set is undefined");
  if (c.items[index_of(VerbType::T3_CanonicalIrregular)])
    throw ContractViolation("canonical irregular verbs cannot be evaluated");

  SubgroupReport rep;
  rep.total = total;
  rep.total_errors = c.total_errors();
  rep.accuracy = Ratio(static_cast<std::int64_t>(total - rep.total_errors),
                       static_cast<std::int64_t>(total));
  std::size_t n4 = 0, e4 = 0;
  for (auto t : kDatasetVerbTypes) {
    const auto n = c.items[index_of(t)];
    const auto e = c.errors[index_of(t)];
    rep.rows.push_back(detail::make_row(to_string(t), label(t), n, e, total, rep.total_errors));
    if (is_type4(t)) {
      n4 += n;
      e4 += e;
    }
  }
  rep.type4 = detail::make_row("T4", "4", n4, e4, total, rep.total_errors);
  return rep;
}

inline SubgroupReport subgroup_report(std::span<const PredictionRecord> preds) {
  if (preds.empty()) throw ConfigError("subgroup report of an empty prediction set is undefined");
  return subgroup_report(count_subgroups(preds));
}

inline nlohmann::json to_json(const SubgroupRow& r) {
  auto num = [](const std::optional<Ratio>& x) -> nlohmann::json {
    return x ? nlohmann::json(to_double(*x)) : nlohmann::json(nullptr);
  };
  return {
      {"subgroup", r.name},
      {"label", r.label},
      {"n", r.n},
      {"errors", r.errors},
      {"data_share", to_double(r.data_share)},
      {"error_share", to_double(r.error_share)},
      {"accuracy", num(r.accuracy)},
      {"disparity_ratio", num(r.disparity_ratio)},
      {"rendered",
       {{"data_share_pct", render_percent(r.data_share)},
        {"error_share_pct", render_percent(r.error_share)},
        {"accuracy_pct", render_percent(r.accuracy)},
        {"disparity_ratio", render_ratio(r.disparity_ratio)}}},
  };
}

inline nlohmann::json to_json(const SubgroupReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows) rows.push_back(to_json(r));
  return {
      {"total", rep.total},
      {"total_errors", rep.total_errors},
      {"accuracy", to_double(rep.accuracy)},
      {"accuracy_pct", render_percent(rep.accuracy)},
      {"subgroups", rows},
      {"type4_rollup", to_json(rep.type4)},
  };
}

inline std::string to_markdown(const SubgroupReport& rep) {
  std::ostringstream out;
  out << "Exact-match accuracy: " << render_percent(rep.accuracy) << "% (" << rep.total - rep.total_errors
      << "/" << rep.total << ")\n\n";
  out << "| Verb Type | n | Data Share (%) | Errors | Error Share (%) | Accuracy (%) | Disparity Ratio |\n";
  out << "|---|---:|---:|---:|---:|---:|---:|\n";
  auto line = [&](const SubgroupRow& r) {
    out << "| " << r.label << " | " << r.n << " | " << render_percent(r.data_share) << " | "
        << r.errors << " | " << render_percent(r.error_share) << " | "
        << render_percent(r.accuracy) << " | " << render_ratio(r.disparity_ratio) << " |\n";
  };
  for (const auto& r : rep.rows) {
    if (r.name == "T4_1") line(rep.type4);
    line(r);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Prediction files

/// Joins lemma<TAB>predicted lines against the gold set. Records come back
/// in gold order; every gold lemma must appear exactly once.
inline std::vector<PredictionRecord> parse_predictions(std::istream& in, const Dataset& gold) {
  std::unordered_map<std::string, std::size_t> gold_index;
  for (std::size_t i = 0; i < gold.size(); ++i) gold_index.emplace(gold.pairs[i].lemma.str(), i);

  std::vector<std::optional<std::string>> predicted(gold.size());
  std::vector<std::string> extra, duplicate;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw ParseError(lineno, "expected lemma<TAB>prediction");
    const std::string lemma = line.substr(0, tab);
    const auto it = gold_index.find(lemma);
    if (it == gold_index.end()) {
      extra.push_back(lemma);
      continue;
    }
    auto& slot = predicted[it->second];
    if (slot) {
      duplicate.push_back(lemma);
      continue;
    }
    slot = line.substr(tab + 1);
  }

  std::vector<std::string> missing;
  for (std::size_t i = 0; i < gold.size(); ++i)
    if (!predicted[i]) missing.push_back(gold.pairs[i].lemma.str());
  if (!missing.empty() || !extra.empty() || !duplicate.empty())
    throw JoinError(std::move(missing), std::move(extra), std::move(duplicate));

  std::vector<PredictionRecord> out;
  out.reserve(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& g = gold.pairs[i];
    out.push_back({g.lemma, g.past, std::move(*predicted[i]), g.vtype});
  }
  return out;
}

inline std::vector<PredictionRecord> parse_predictions(std::string_view text, const Dataset& gold) {
  std::istringstream in{std::string(text)};
  return parse_predictions(in, gold);
}

/// Writes lemma<TAB>predicted lines.
inline std::string emit_predictions(std::span<const PredictionRecord> preds) {
  std::string out;
  for (const auto& p : preds) {
    out += p.lemma.str();
    out += '\t';
    out += p.predicted;
    out += '\n';
  }
  return out;
}

}  // namespace jpast

#endif  // JPAST_METRICS_HPP
