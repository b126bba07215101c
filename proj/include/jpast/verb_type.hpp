#ifndef JPAST_VERB_TYPE_HPP
#define JPAST_VERB_TYPE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace jpast {

/// Orthographic conjugation class. T3 is recognised but never emitted.
enum class VerbType : std::uint8_t {
  T1_Godan,
  T2_Ichidan,
  T3_CanonicalIrregular,
  T4_1_IGemination,
  T4_2_EGemination,
  T4_3_Localized,
};

inline constexpr std::size_t kVerbTypeCount = 6;

inline constexpr std::array<VerbType, kVerbTypeCount> kAllVerbTypes = {
    VerbType::T1_Godan,         VerbType::T2_Ichidan,       VerbType::T3_CanonicalIrregular,
    VerbType::T4_1_IGemination, VerbType::T4_2_EGemination, VerbType::T4_3_Localized};

/// Types that may appear in a dataset, in table order.
inline constexpr std::array<VerbType, 5> kDatasetVerbTypes = {
    VerbType::T1_Godan, VerbType::T2_Ichidan, VerbType::T4_1_IGemination,
    VerbType::T4_2_EGemination, VerbType::T4_3_Localized};

constexpr std::size_t index_of(VerbType t) { return static_cast<std::size_t>(t); }

constexpr bool is_type4(VerbType t) {
  return t == VerbType::T4_1_IGemination || t == VerbType::T4_2_EGemination ||
         t == VerbType::T4_3_Localized;
}

/// Machine name used in TSV columns and JSON ("T1", "T4_2", ...).
inline const char* to_string(VerbType t) {
  static constexpr std::array<const char*, kVerbTypeCount> names = {"T1", "T2",   "T3",
                                                                    "T4_1", "T4_2", "T4_3"};
  return names[index_of(t)];
}

/// Human label matching the paper-style tables ("1", "4-2", ...).
inline const char* label(VerbType t) {
  static constexpr std::array<const char*, kVerbTypeCount> labels = {"1",   "2",   "3",
                                                                     "4-1", "4-2", "4-3"};
  return labels[index_of(t)];
}

/// Accepts "T4_2", "4_2", "4-2" and the like.
inline std::optional<VerbType> parse_verb_type(std::string_view s) {
  if (!s.empty() && (s.front() == 'T' || s.front() == 't')) s.remove_prefix(1);
  std::string norm(s);
  for (auto& c : norm)
    if (c == '-') c = '_';
  for (auto t : kAllVerbTypes) {
    if (norm == to_string(t) + 1) return t;
  }
  return std::nullopt;
}

}  // namespace jpast

#endif  // JPAST_VERB_TYPE_HPP
