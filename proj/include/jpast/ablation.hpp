#ifndef JPAST_ABLATION_HPP
#define JPAST_ABLATION_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jpast/dataset.hpp"
#include "jpast/error.hpp"
#include "jpast/verb_type.hpp"

namespace jpast {

/// A dataset condition: which verb types survive in both train and test.
struct AblationCondition {
  std::string name;
  std::set<VerbType> included_types;

  bool includes(VerbType t) const { return included_types.count(t) != 0; }

  friend bool operator==(const AblationCondition&, const AblationCondition&) = default;
};

namespace detail {

inline AblationCondition regular_plus(std::string name, std::initializer_list<VerbType> extra) {
  AblationCondition c{std::move(name), {VerbType::T1_Godan, VerbType::T2_Ichidan}};
  c.included_types.insert(extra.begin(), extra.end());
  return c;
}

}  // namespace detail

/// The eight presets, Full first, then RegularOnly, single subtypes, pairs.
inline std::vector<AblationCondition> enumerate_conditions() {
  using enum VerbType;
  return {
      detail::regular_plus("Full", {T4_1_IGemination, T4_2_EGemination, T4_3_Localized}),
      detail::regular_plus("RegularOnly", {}),
      detail::regular_plus("Regular+4_1", {T4_1_IGemination}),
      detail::regular_plus("Regular+4_2", {T4_2_EGemination}),
      detail::regular_plus("Regular+4_3", {T4_3_Localized}),
      detail::regular_plus("Regular+4_1+4_2", {T4_1_IGemination, T4_2_EGemination}),
      detail::regular_plus("Regular+4_1+4_3", {T4_1_IGemination, T4_3_Localized}),
      detail::regular_plus("Regular+4_2+4_3", {T4_2_EGemination, T4_3_Localized}),
  };
}

inline std::optional<AblationCondition> find_condition(std::string_view name) {
  for (auto& c : enumerate_conditions())
    if (c.name == name) return c;
  return std::nullopt;
}

inline AblationCondition condition(std::string_view name) {
  if (auto c = find_condition(name)) return *c;
  throw ConfigError("unknown ablation condition: " + std::string(name));
}

inline Dataset filter_types(const Dataset& d, const AblationCondition& cond) {
  Dataset out;
  out.provenance = d.provenance;
  std::copy_if(d.pairs.begin(), d.pairs.end(), std::back_inserter(out.pairs),
               [&](const InflectionPair& p) { return cond.includes(p.vtype); });
  return out;
}

/// Removes the same verb types from train and test, keeping order.
inline std::pair<Dataset, Dataset> apply(const AblationCondition& cond, const Dataset& train,
                                         const Dataset& test) {
  if (!cond.includes(VerbType::T1_Godan) || !cond.includes(VerbType::T2_Ichidan))
    throw ConfigError("condition " + cond.name + " drops a regular class");
  auto kept_train = filter_types(train, cond);
  auto kept_test = filter_types(test, cond);
  if (kept_test.empty()) throw ConfigError("condition " + cond.name + " leaves an empty test set");
  return {std::move(kept_train), std::move(kept_test)};
}

}  // namespace jpast

#endif  // JPAST_ABLATION_HPP
