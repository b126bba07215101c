#ifndef JPAST_DATASET_HPP
#define JPAST_DATASET_HPP

// SIGMORPHON-style TSV I/O, per-type statistics, seeded train/test splits and
// a synthetic lexicon generator.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "jpast/classifier.hpp"
#include "jpast/conjugator.hpp"
#include "jpast/error.hpp"
#include "jpast/kana.hpp"
#include "jpast/random.hpp"
#include "jpast/ratio.hpp"
#include "jpast/verb_type.hpp"

namespace jpast {

/// The literal third column: no morphosyntactic features.
inline constexpr std::string_view kFeaturePlaceholder = "_";

struct Dataset {
  std::vector<InflectionPair> pairs;
  std::string provenance;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }

  /// Pairs are compared; provenance is metadata.
  friend bool operator==(const Dataset& a, const Dataset& b) { return a.pairs == b.pairs; }
};

/// Splits one line on TAB.
inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

/// Reads lemma<TAB>past<TAB>_ lines. Empty lines are skipped. Every pair is
/// classified; duplicates and canonical irregulars are rejected.
inline Dataset parse_tsv(std::istream& in, std::string provenance = {}) {
  Dataset d;
  d.provenance = std::move(provenance);
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3)
      throw ParseError(lineno, "expected 3 TAB-separated fields, got " +
                                   std::to_string(fields.size()));
    if (fields[2] != kFeaturePlaceholder)
      throw ParseError(lineno, "feature column must be \"_\", got \"" + std::string(fields[2]) +
                                   "\"");
    KanaWord lemma, past;
    try {
      lemma = segment_moras(fields[0]);
      past = segment_moras(fields[1]);
    } catch (const RejectedInput& e) {
      throw ParseError(lineno, e.what());
    }
    if (!seen.insert(lemma.str()).second)
      throw ValidationError(lineno, "duplicate lemma " + lemma.str());
    VerbType t;
    try {
      t = infer_type(lemma, past);
    } catch (const UnclassifiableError& e) {
      throw ValidationError(lineno, e.what());
    }
    if (t == VerbType::T3_CanonicalIrregular)
      throw ValidationError(lineno, "canonical irregular " + lemma.str() + " is excluded");
    d.pairs.push_back({std::move(lemma), std::move(past), t});
  }
  return d;
}

inline Dataset parse_tsv(std::string_view text, std::string provenance = {}) {
  std::istringstream in{std::string(text)};
  return parse_tsv(in, std::move(provenance));
}

/// lemma TAB past TAB "_" LF per pair; UTF-8, no BOM.
inline void emit_tsv(const Dataset& d, std::ostream& out) {
  for (const auto& p : d.pairs)
    out << p.lemma.str() << '\t' << p.past.str() << '\t' << kFeaturePlaceholder << '\n';
}

inline std::string emit_tsv(const Dataset& d) {
  std::ostringstream out;
  emit_tsv(d, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Statistics

struct DatasetStats {
  std::array<std::size_t, kVerbTypeCount> counts{};
  std::size_t total = 0;

  std::size_t count(VerbType t) const { return counts[index_of(t)]; }

  std::size_t type4_count() const {
    return count(VerbType::T4_1_IGemination) + count(VerbType::T4_2_EGemination) +
           count(VerbType::T4_3_Localized);
  }

  /// Zero when the dataset is empty.
  Ratio proportion(VerbType t) const {
    return total ? Ratio(static_cast<std::int64_t>(count(t)), static_cast<std::int64_t>(total))
                 : Ratio(0);
  }

  Ratio type4_proportion() const {
    return total ? Ratio(static_cast<std::int64_t>(type4_count()),
                         static_cast<std::int64_t>(total))
                 : Ratio(0);
  }
};

inline DatasetStats stats(const Dataset& d) {
  DatasetStats s;
  for (const auto& p : d.pairs) ++s.counts[index_of(p.vtype)];
  s.total = d.size();
  return s;
}

/// Table-1 layout: type, count, percent to 4 significant digits.
inline std::string render_stats(const DatasetStats& s) {
  std::ostringstream out;
  auto row = [&](const std::string& name, std::size_t n, const Ratio& share) {
    out << name << '\t' << n << '\t' << render_significant(to_double(share) * 100.0, 4) << '\n';
  };
  out << "type\tcount\tpercent\n";
  row("All", s.total, s.total ? Ratio(1) : Ratio(0));
  for (auto t : kAllVerbTypes) {
    if (t == VerbType::T4_1_IGemination) row("4", s.type4_count(), s.type4_proportion());
    row(label(t), s.count(t), s.proportion(t));
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Splitting

enum class SplitKind { Form, Lemma };

struct SplitSpec {
  SplitKind kind = SplitKind::Lemma;
  double test_fraction = 0.1;
  std::uint64_t seed = 0;
};

/// floor(total * fraction), at least 1. The epsilon keeps products such as
/// 0.29 * 100 from landing just under an integer.
inline std::size_t test_size_for(std::size_t total, double fraction) {
  const auto n = static_cast<std::size_t>(std::floor(static_cast<double>(total) * fraction + 1e-9));
  return std::max<std::size_t>(1, n);
}

/// Seeded partition into (train, test); both keep the input order. A lemma
/// split draws whole lemma groups, so no lemma lands on both sides.
inline std::pair<Dataset, Dataset> split(const Dataset& d, const SplitSpec& spec) {
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0))
    throw ConfigError("test fraction must lie in (0, 1)");
  const std::size_t want = test_size_for(d.size(), spec.test_fraction);
  if (d.size() < 2 || want >= d.size())
    throw ConfigError("split of " + std::to_string(d.size()) + " pairs at fraction " +
                      std::to_string(spec.test_fraction) + " leaves one side empty");

  // Groups of row indices; one row each for a form split.
  std::vector<std::vector<std::size_t>> groups;
  if (spec.kind == SplitKind::Form) {
    groups.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) groups.push_back({i});
  } else {
    std::unordered_map<std::string, std::size_t> by_lemma;
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto [it, fresh] = by_lemma.try_emplace(d.pairs[i].lemma.str(), groups.size());
      if (fresh) groups.emplace_back();
      groups[it->second].push_back(i);
    }
  }

  Rng rng(spec.seed);
  rng.shuffle(groups);
  std::vector<bool> in_test(d.size(), false);
  std::size_t taken = 0;
  for (const auto& g : groups) {
    if (taken >= want) break;
    for (auto i : g) in_test[i] = true;
    taken += g.size();
  }

  Dataset train, test;
  train.provenance = test.provenance = d.provenance;
  for (std::size_t i = 0; i < d.size(); ++i) (in_test[i] ? test : train).pairs.push_back(d.pairs[i]);
  if (train.empty() || test.empty())
    throw ConfigError("split leaves one side empty");

  if (spec.kind == SplitKind::Lemma) {
    std::unordered_set<std::string> train_lemmas;
    for (const auto& p : train.pairs) train_lemmas.insert(p.lemma.str());
    for (const auto& p : test.pairs)
      if (train_lemmas.count(p.lemma.str()))
        throw ContractViolation("lemma split leaked " + p.lemma.str());
  }
  return {std::move(train), std::move(test)};
}

// ---------------------------------------------------------------------------
// Synthetic lexicon

using TypeCounts = std::array<std::size_t, kVerbTypeCount>;

/// Type counts of the reference lexicon: 2503 / 1298 / 0 / 119 / 37 / 1.
inline constexpr TypeCounts kTable1Counts = {2503, 1298, 0, 119, 37, 1};

namespace detail {

struct MoraPools {
  std::vector<Mora> stem;  // plain moras usable anywhere in a stem
  std::vector<Mora> after_sokuon;
  std::vector<Mora> godan_finals;
};

inline const MoraPools& mora_pools() {
  static const MoraPools pools = [] {
    MoraPools p;
    const std::u32string plain =
        U"あいうえおかきくけこがぎぐげごさしすせそざじずぜぞたちつてとだでど"
        U"なにぬねのはひふへほばびぶべぼぱぴぷぺぽまみむめもやゆよらりるれろわ";
    for (char32_t cp : plain) p.stem.push_back(Mora::make(cp));
    for (char32_t base : std::u32string(U"きしちにひみりぎじび"))
      for (char32_t glide : std::u32string(U"ゃゅょ")) p.stem.push_back(Mora::make(base, glide));
    p.stem.push_back(Mora::make(kMoraicNasal));
    for (const auto& m : p.stem) {
      const bool voiceless_stop = m.onset == Onset::K || m.onset == Onset::S ||
                                  m.onset == Onset::T || m.onset == Onset::P;
      if (voiceless_stop) p.after_sokuon.push_back(m);
    }
    for (const auto& rule : kGodanRules) p.godan_finals.push_back(segment_moras(rule.final_mora)[0]);
    return p;
  }();
  return pools;
}

/// Random stem of `length` moras. The last mora must satisfy `last_ok`.
/// No leading っ/ん, no っっ, っ only before a voiceless onset and never last.
template <typename LastPredicate>
KanaWord random_stem(Rng& rng, std::size_t length, LastPredicate last_ok) {
  const auto& pools = mora_pools();
  static const Mora sokuon = Mora::make(kSokuon);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Mora> moras;
    bool ok = true;
    for (std::size_t i = 0; i < length && ok; ++i) {
      const bool last = i + 1 == length;
      const bool prev_sokuon = !moras.empty() && moras.back().is_sokuon;
      if (!prev_sokuon && i > 0 && !last && rng.below(8) == 0) {
        moras.push_back(sokuon);
        continue;
      }
      const auto& pool = prev_sokuon ? pools.after_sokuon : pools.stem;
      Mora m = rng.pick(pool);
      if (i == 0 && m.is_moraic_nasal) {
        ok = false;
        break;
      }
      moras.push_back(std::move(m));
    }
    if (ok && last_ok(moras.back())) return KanaWord(std::move(moras));
  }
  throw GenerationError("no stem satisfies the final-mora constraint");
}

inline KanaWord random_lemma(Rng& rng, VerbType t) {
  const auto& pools = mora_pools();
  static const KanaWord ru = "る"_kana;
  const auto stem_length = static_cast<std::size_t>(rng.between(1, 5));
  switch (t) {
    case VerbType::T1_Godan: {
      const Mora final_mora = rng.pick(pools.godan_finals);
      const auto last_ok = [&](const Mora& last) {
        if (final_mora.surface == "る")  // keeps clear of 4-1/4-2 and する/くる
          return last.vowel != Vowel::I && last.vowel != Vowel::E && last.surface != "す" &&
                 last.surface != "く";
        if (final_mora.surface == "く") return last.surface != "い";  // keeps clear of いく
        return true;
      };
      return random_stem(rng, stem_length, last_ok) + KanaWord({final_mora});
    }
    case VerbType::T2_Ichidan:
      return random_stem(rng, stem_length,
                         [](const Mora& m) { return m.vowel == Vowel::I || m.vowel == Vowel::E; }) +
             ru;
    case VerbType::T4_1_IGemination:
      return random_stem(rng, stem_length, [](const Mora& m) { return m.vowel == Vowel::I; }) + ru;
    case VerbType::T4_2_EGemination:
      return random_stem(rng, stem_length, [](const Mora& m) { return m.vowel == Vowel::E; }) + ru;
    case VerbType::T4_3_Localized:
      return "いく"_kana;
    case VerbType::T3_CanonicalIrregular:
      break;
  }
  throw ConfigError("canonical irregular verbs are never generated");
}

}  // namespace detail

/// Random lexicon with exactly counts[t] pairs of each type, unique lemmas
/// of 2-6 moras, gold forms from conjugate_past, in seeded random order.
/// T3 must be 0; T4_3 is the single attested lemma いく.
inline Dataset generate_synthetic(const TypeCounts& counts, std::uint64_t seed,
                                  std::size_t retry_budget = 10000) {
  if (counts[index_of(VerbType::T3_CanonicalIrregular)] != 0)
    throw ConfigError("T3 count must be 0: canonical irregulars are excluded");
  if (counts[index_of(VerbType::T4_3_Localized)] > 1)
    throw GenerationError("T4_3 has a single attested lemma (いく); cannot generate " +
                          std::to_string(counts[index_of(VerbType::T4_3_Localized)]));

  Rng rng(seed);
  Dataset d;
  d.provenance = "synthetic seed=" + std::to_string(seed);
  std::unordered_set<std::string> seen;
  for (auto t : kDatasetVerbTypes) {
    for (std::size_t k = 0; k < counts[index_of(t)]; ++k) {
      std::size_t attempts = 0;
      while (true) {
        if (attempts++ >= retry_budget)
          throw GenerationError(std::string("cannot find a fresh ") + to_string(t) +
                                " lemma within " + std::to_string(retry_budget) + " draws");
        auto lemma = detail::random_lemma(rng, t);
        if (!seen.insert(lemma.str()).second) continue;
        auto past = conjugate_past(lemma, t);
        d.pairs.push_back({std::move(lemma), std::move(past), t});
        break;
      }
    }
  }
  rng.shuffle(d.pairs);
  return d;
}

}  // namespace jpast

#endif  // JPAST_DATASET_HPP
