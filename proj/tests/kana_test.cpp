#include <catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "jpast/kana.hpp"
#include "support.hpp"

using namespace jpast;

namespace {

std::vector<std::string> surfaces(const KanaWord& w) {
  std::vector<std::string> out;
  for (const auto& m : w) out.push_back(m.surface);
  return out;
}

}  // namespace

TEST_CASE("segment_moras splits plain kana one mora per codepoint", "[kana]") {
  CHECK(surfaces(segment_moras("かく")) == std::vector<std::string>{"か", "く"});
}

TEST_CASE("segment_moras keeps sokuon standalone", "[kana]") {
  const auto w = segment_moras("あきれかえった");
  REQUIRE(surfaces(w) == std::vector<std::string>{"あ", "き", "れ", "か", "え", "っ", "た"});
  CHECK(w[5].is_sokuon);
  CHECK(w[5].onset == Onset::Special);
  CHECK(w[5].vowel == Vowel::None);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != 5) CHECK_FALSE(w[i].is_sokuon);
}

TEST_CASE("segment_moras attaches small glides to the left", "[kana]") {
  const auto w = segment_moras("きゃく");
  REQUIRE(surfaces(w) == std::vector<std::string>{"きゃ", "く"});
  CHECK(w[0].is_digraph());
  CHECK(w[0].onset == Onset::K);
  CHECK(w[0].vowel == Vowel::A);
}

TEST_CASE("glides never attach to っ, ん or another glide", "[kana]") {
  CHECK(surfaces(segment_moras("っゃ")) == std::vector<std::string>{"っ", "ゃ"});
  CHECK(surfaces(segment_moras("んょ")) == std::vector<std::string>{"ん", "ょ"});
  CHECK(surfaces(segment_moras("ゃゅ")) == std::vector<std::string>{"ゃ", "ゅ"});
  const auto nasal = segment_moras("ん")[0];
  CHECK(nasal.is_moraic_nasal);
  CHECK(mora_features(nasal) == std::pair{Onset::Special, Vowel::None});
}

TEST_CASE("mora_features reads the gojuon grid", "[kana]") {
  CHECK(mora_features(segment_moras("け")[0]) == std::pair{Onset::K, Vowel::E});
  CHECK(mora_features(segment_moras("じ")[0]) == std::pair{Onset::Z, Vowel::I});
  CHECK(mora_features(segment_moras("っ")[0]) == std::pair{Onset::Special, Vowel::None});
  CHECK(mora_features(segment_moras("あ")[0]) == std::pair{Onset::Zero, Vowel::A});
  CHECK(mora_features(segment_moras("ぽ")[0]) == std::pair{Onset::P, Vowel::O});
  CHECK(mora_features(segment_moras("る")[0]) == std::pair{Onset::R, Vowel::U});
  CHECK(mora_features(segment_moras("しょ")[0]) == std::pair{Onset::S, Vowel::O});
}

TEST_CASE("segment_moras rejects non-hiragana with codepoint and index", "[kana][errors]") {
  auto rejected_at = [](const std::string& text, char32_t cp, std::size_t index) {
    try {
      segment_moras(text);
    } catch (const RejectedInput& e) {
      CHECK(e.codepoint() == cp);
      CHECK(e.index() == index);
      return;
    }
    FAIL("no RejectedInput for " << text);
  };
  rejected_at("かカ", U'カ', 1);    // katakana
  rejected_at("書く", U'書', 0);    // kanji
  rejected_at("らーめん", U'ー', 1);  // long-vowel mark
  rejected_at("ゝ", U'ゝ', 0);      // iteration mark is outside the block
  rejected_at("abc", U'a', 0);
  CHECK_THROWS_AS(segment_moras(""), RejectedInput);
  CHECK_THROWS_AS(segment_moras("\xe3\x81"), RejectedInput);  // truncated UTF-8
}

TEST_CASE("segmentation round-trips any hiragana string", "[kana][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto s = testing::random_hiragana(rng, 10);
    const auto w = segment_moras(s);
    REQUIRE(w.str() == s);
    for (const auto& m : w) {
      if (m.is_digraph()) {
        const auto cps = utf8::decode(m.surface);
        REQUIRE(cps.size() == 2);
        REQUIRE(is_small_glide(cps[1]));
      }
      if (m.is_sokuon || m.is_moraic_nasal) {
        REQUIRE(m.onset == Onset::Special);
        REQUIRE(m.vowel == Vowel::None);
      }
    }
  }
}

TEST_CASE("appending a base kana never resegments the prefix", "[kana][property]") {
  std::mt19937_64 rng(12);
  const std::u32string bases = U"あかさたなはまやらわがざだばぱんっ";
  for (int i = 0; i < 1000; ++i) {
    const auto s = testing::random_hiragana(rng, 8);
    const auto before = segment_moras(s);
    const auto extended = segment_moras(s + utf8::encode(bases[rng() % bases.size()]));
    REQUIRE(extended.size() == before.size() + 1);
    REQUIRE(extended.slice(0, before.size()) == before);
  }
}

TEST_CASE("diff finds the single gemination edit", "[kana][diff]") {
  // Expected scripts confirmed against brute_force_edit_distance below.
  SECTION("omission") {
    const auto script = diff("ねがえった"_kana, "ねがえた"_kana);
    const auto changes = script.changes();
    REQUIRE(changes.size() == 1);
    CHECK(changes[0].kind == EditKind::Delete);
    CHECK(changes[0].source_index == 3);
    CHECK(changes[0].from->surface == "っ");
    CHECK(testing::brute_force_edit_distance("ねがえった"_kana, "ねがえた"_kana) == 1);
  }
  SECTION("insertion before た") {
    const auto script = diff("できた"_kana, "できった"_kana);
    const auto changes = script.changes();
    REQUIRE(changes.size() == 1);
    CHECK(changes[0].kind == EditKind::Insert);
    CHECK(changes[0].source_index == 2);  // before た
    CHECK(changes[0].to->surface == "っ");
    CHECK(testing::brute_force_edit_distance("できた"_kana, "できった"_kana) == 1);
  }
  SECTION("identity") {
    const auto script = diff("たべた"_kana, "たべた"_kana);
    CHECK(script.cost() == 0);
    CHECK(script.ops.size() == 3);
  }
}

TEST_CASE("diff tie-break prefers leftmost delete, then insert, then substitute", "[kana][diff]") {
  // ああ -> あ: both deletions are optimal; the leftmost wins.
  auto changes = diff("ああ"_kana, "あ"_kana).changes();
  REQUIRE(changes.size() == 1);
  CHECK(changes[0].kind == EditKind::Delete);
  CHECK(changes[0].source_index == 0);

  // かき -> きか: delete+insert beats two substitutions only on ordering;
  // both cost 2, delete comes first.
  changes = diff("かき"_kana, "きか"_kana).changes();
  REQUIRE(changes.size() == 2);
  CHECK(changes[0].kind == EditKind::Delete);
  CHECK(changes[0].source_index == 0);
  CHECK(changes[1].kind == EditKind::Insert);
}

TEST_CASE("diff is minimal and replays to its target", "[kana][diff][property]") {
  std::mt19937_64 rng(13);
  const std::vector<std::string> alphabet = {"か", "っ", "た", "きゃ"};
  for (int i = 0; i < 300; ++i) {
    const auto a = testing::random_word(rng, alphabet, 1, 4);
    const auto b = testing::random_word(rng, alphabet, 1, 4);
    const auto script = diff(a, b);
    REQUIRE(apply(script, a) == b);
    REQUIRE(script.cost() == testing::brute_force_edit_distance(a, b));
    REQUIRE(diff(a, b).ops == script.ops);  // deterministic
    REQUIRE(diff(a, a).cost() == 0);
  }
}

TEST_CASE("diff replays on longer random words", "[kana][diff][property]") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    const auto a = segment_moras(testing::random_hiragana(rng, 12));
    const auto b = segment_moras(testing::random_hiragana(rng, 12));
    REQUIRE(apply(diff(a, b), a) == b);
    REQUIRE(apply(diff(a, a), a) == a);
  }
}
