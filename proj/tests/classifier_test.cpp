#include <catch_amalgamated.hpp>

#include <string>
#include <tuple>
#include <vector>

#include "jpast/classifier.hpp"
#include "jpast/dataset.hpp"

using namespace jpast;

namespace {

VerbType infer(const char* lemma, const char* past) {
  return infer_type(segment_moras(lemma), segment_moras(past));
}

}  // namespace

TEST_CASE("infer_type on attested pairs", "[classifier]") {
  CHECK(infer("まじる", "まじった") == VerbType::T4_1_IGemination);
  CHECK(infer("あきれかえる", "あきれかえった") == VerbType::T4_2_EGemination);
  CHECK(infer("ねがえる", "ねがえった") == VerbType::T4_2_EGemination);
  CHECK(infer("とる", "とった") == VerbType::T1_Godan);
  CHECK(conjugate_past("とる"_kana, VerbType::T1_Godan).str() == "とった");
  CHECK(infer("みる", "みた") == VerbType::T2_Ichidan);
  CHECK(infer("いく", "いった") == VerbType::T4_3_Localized);
  CHECK(infer("かく", "かいた") == VerbType::T1_Godan);
  CHECK(infer("たべる", "たべた") == VerbType::T2_Ichidan);
  CHECK(infer("する", "した") == VerbType::T3_CanonicalIrregular);
  CHECK(infer("くる", "きた") == VerbType::T3_CanonicalIrregular);
  CHECK(infer("べんきょうする", "べんきょうした") == VerbType::T3_CanonicalIrregular);
}

TEST_CASE("T3 and T4_3 checks fall through when the past does not match", "[classifier]") {
  // かする is a Godan verb that merely ends in する.
  CHECK(infer("かする", "かすった") == VerbType::T1_Godan);
  // いく compounds with a regular past would be T1 if they existed.
  CHECK(infer("ひいく", "ひいいた") == VerbType::T1_Godan);
  CHECK_THROWS_AS(infer("かく", "かった"), UnclassifiableError);
}

TEST_CASE("infer_type reports the nearest rule on failure", "[classifier][errors]") {
  try {
    infer("かく", "かいだ");
    FAIL("expected UnclassifiableError");
  } catch (const UnclassifiableError& e) {
    CHECK(e.lemma() == "かく");
    CHECK(e.past() == "かいだ");
    CHECK_FALSE(e.diagnosis().empty());
    CHECK(e.diagnosis().find("かいた") != std::string::npos);
  }
  CHECK_THROWS_AS(infer("かふ", "かふた"), UnclassifiableError);
  CHECK_THROWS_AS(infer_type(KanaWord{}, "た"_kana), UnclassifiableError);
}

TEST_CASE("classify_dataset labels rows and collects errors with their index", "[classifier]") {
  auto res = classify_dataset({{"かく"_kana, "かいた"_kana}, {"たべる"_kana, "たべた"_kana}});
  REQUIRE(res.errors.empty());
  REQUIRE(res.pairs.size() == 2);
  CHECK(res.pairs[0].vtype == VerbType::T1_Godan);
  CHECK(res.pairs[1].vtype == VerbType::T2_Ichidan);

  res = classify_dataset({});
  CHECK(res.pairs.empty());
  CHECK(res.errors.empty());

  res = classify_dataset({{"かく"_kana, "かいた"_kana}, {"かく"_kana, "かかた"_kana}, {"みる"_kana, "みた"_kana}});
  CHECK(res.pairs.size() == 2);
  REQUIRE(res.errors.size() == 1);
  CHECK(res.errors[0].row == 1);
}

TEST_CASE("round trip A: infer_type recovers the generating type", "[classifier][property]") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto d = generate_synthetic({300, 300, 0, 100, 100, 1}, seed);
    for (const auto& p : d.pairs) {
      INFO(p.lemma.str() << " " << to_string(p.vtype));
      REQUIRE(infer_type(p.lemma, conjugate_past(p.lemma, p.vtype)) == p.vtype);
    }
  }
}

TEST_CASE("round trip B: conjugating with the inferred type reproduces the past", "[classifier][property]") {
  // Pairs built directly from every rule, including T3, over random stems.
  Rng rng(99);
  const auto any = [](const Mora&) { return true; };
  std::size_t checked = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto stem = detail::random_stem(rng, static_cast<std::size_t>(rng.between(1, 4)), any);
    for (const char* ending : {"う", "く", "ぐ", "す", "つ", "ぬ", "ぶ", "む", "る", "する", "くる", "いく"}) {
      const auto lemma = stem + segment_moras(ending);
      for (auto t : kAllVerbTypes) {
        KanaWord past;
        try {
          past = conjugate_past(lemma, t);
        } catch (const Error&) {
          continue;
        }
        const auto inferred = infer_type(lemma, past);
        INFO(lemma.str() << " " << past.str() << " " << to_string(inferred));
        REQUIRE(conjugate_past(lemma, inferred) == past);
        ++checked;
      }
    }
  }
  CHECK(checked > 30000);
}
