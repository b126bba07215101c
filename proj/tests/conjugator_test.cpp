#include <catch_amalgamated.hpp>

#include <string>
#include <tuple>
#include <vector>

#include "jpast/conjugator.hpp"
#include "jpast/dataset.hpp"

using namespace jpast;

TEST_CASE("conjugate_past on attested verbs", "[conjugator]") {
  const std::vector<std::tuple<const char*, VerbType, const char*>> cases = {
      {"かく", VerbType::T1_Godan, "かいた"},
      {"たべる", VerbType::T2_Ichidan, "たべた"},
      {"まじる", VerbType::T4_1_IGemination, "まじった"},
      {"あきれかえる", VerbType::T4_2_EGemination, "あきれかえった"},
      {"いく", VerbType::T4_3_Localized, "いった"},
      {"ねがえる", VerbType::T4_2_EGemination, "ねがえった"},
      {"する", VerbType::T3_CanonicalIrregular, "した"},
      {"くる", VerbType::T3_CanonicalIrregular, "きた"},
      {"みる", VerbType::T2_Ichidan, "みた"},
  };
  for (const auto& [lemma, t, past] : cases) {
    INFO(lemma << " " << to_string(t));
    CHECK(conjugate_past(segment_moras(lemma), t).str() == past);
  }
}

TEST_CASE("every Godan ending", "[conjugator]") {
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"かう", "かった"}, {"かく", "かいた"}, {"およぐ", "およいだ"},
      {"はなす", "はなした"}, {"まつ", "まった"}, {"しぬ", "しんだ"},
      {"とぶ", "とんだ"}, {"よむ", "よんだ"}, {"とる", "とった"},
  };
  for (const auto& [lemma, past] : cases)
    CHECK(conjugate_past(segment_moras(lemma), VerbType::T1_Godan).str() == past);
}

TEST_CASE("compounds of する, くる and いく", "[conjugator]") {
  CHECK(conjugate_past("べんきょうする"_kana, VerbType::T3_CanonicalIrregular).str() == "べんきょうした");
  CHECK(conjugate_past("でてくる"_kana, VerbType::T3_CanonicalIrregular).str() == "でてきた");
  CHECK(conjugate_past("でていく"_kana, VerbType::T4_3_Localized).str() == "でていった");
}

TEST_CASE("conjugate_past rejects lemmas outside the type's domain", "[conjugator][errors]") {
  CHECK_THROWS_AS(conjugate_past("かく"_kana, VerbType::T2_Ichidan), RuleDomainError);
  CHECK_THROWS_AS(conjugate_past("かふ"_kana, VerbType::T1_Godan), RuleDomainError);
  CHECK_THROWS_AS(conjugate_past("かく"_kana, VerbType::T4_3_Localized), RuleDomainError);
  CHECK_THROWS_AS(conjugate_past("たべる"_kana, VerbType::T3_CanonicalIrregular), RuleDomainError);
  CHECK_THROWS_AS(conjugate_past("とる"_kana, VerbType::T4_1_IGemination), RuleDomainError);
  CHECK_THROWS_AS(conjugate_past("まじる"_kana, VerbType::T4_2_EGemination), RuleDomainError);
  // Bare endings leave nothing to attach the suffix to.
  CHECK_THROWS_AS(conjugate_past("る"_kana, VerbType::T2_Ichidan), RejectedInput);
  CHECK_THROWS_AS(conjugate_past("く"_kana, VerbType::T1_Godan), RejectedInput);
  CHECK_THROWS_AS(conjugate_past(KanaWord{}, VerbType::T1_Godan), RejectedInput);
}

TEST_CASE("over_regularized_form", "[conjugator]") {
  CHECK(over_regularized_form("まじる"_kana, VerbType::T4_1_IGemination)->str() == "まじた");
  CHECK(over_regularized_form("ねがえる"_kana, VerbType::T4_2_EGemination)->str() == "ねがえた");
  CHECK(over_regularized_form("いく"_kana, VerbType::T4_3_Localized)->str() == "いいた");
  CHECK_FALSE(over_regularized_form("かく"_kana, VerbType::T1_Godan).has_value());
  CHECK_FALSE(over_regularized_form("たべる"_kana, VerbType::T2_Ichidan).has_value());
  CHECK_FALSE(over_regularized_form("する"_kana, VerbType::T3_CanonicalIrregular).has_value());
}

namespace {

// Every (lemma, type) pair the generator can produce, across a few seeds.
std::vector<InflectionPair> sample_pairs() {
  std::vector<InflectionPair> out;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto d = generate_synthetic({400, 400, 0, 200, 200, 1}, seed);
    out.insert(out.end(), d.pairs.begin(), d.pairs.end());
  }
  return out;
}

bool geminates(VerbType t, const KanaWord& lemma) {
  if (t == VerbType::T1_Godan) {
    const auto& f = lemma.back().surface;
    return f == "う" || f == "つ" || f == "る";
  }
  return is_type4(t);
}

}  // namespace

TEST_CASE("conjugation invariants over generated lemmas", "[conjugator][property]") {
  const auto pairs = sample_pairs();
  REQUIRE(pairs.size() > 3000);
  for (const auto& p : pairs) {
    INFO(p.lemma.str() << " " << to_string(p.vtype));
    const auto past = conjugate_past(p.lemma, p.vtype);
    REQUIRE(past == conjugate_past(p.lemma, p.vtype));
    REQUIRE((past.back().surface == "た" || past.back().surface == "だ"));

    // っ appears right before the suffix exactly for the geminating rules.
    const bool has_gem = past.size() >= 2 && past[past.size() - 2].is_sokuon;
    REQUIRE(has_gem == geminates(p.vtype, p.lemma));

    if (p.vtype == VerbType::T2_Ichidan) {
      const auto s = p.lemma.str();
      REQUIRE(past.str() == s.substr(0, s.size() - std::string("る").size()) + "た");
    }
    if (p.vtype == VerbType::T4_1_IGemination || p.vtype == VerbType::T4_2_EGemination) {
      const auto over = over_regularized_form(p.lemma, p.vtype);
      REQUIRE(over.has_value());
      const auto changes = diff(past, *over).changes();
      REQUIRE(changes.size() == 1);
      REQUIRE(changes[0].kind == EditKind::Delete);
      REQUIRE(changes[0].from->is_sokuon);
    }
  }
}
