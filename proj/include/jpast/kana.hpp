#ifndef JPAST_KANA_HPP
#define JPAST_KANA_HPP

// Hiragana text model: mora segmentation, gojuon feature lookup and
// mora-level edit scripts.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jpast/error.hpp"

namespace jpast {

enum class Onset : std::uint8_t {
  Zero,  // bare vowel
  K, G, S, Z, T, D, N, H, B, P, M, Y, R, W, V,
  Special,  // っ and ん
};

enum class Vowel : std::uint8_t { A, I, U, E, O, None };

inline const char* to_string(Onset o) {
  static constexpr std::array<const char*, 17> names = {
      "zero", "k", "g", "s", "z", "t", "d", "n", "h",
      "b", "p", "m", "y", "r", "w", "v", "special"};
  return names[static_cast<std::size_t>(o)];
}

inline const char* to_string(Vowel v) {
  static constexpr std::array<const char*, 6> names = {"a", "i", "u", "e", "o", "none"};
  return names[static_cast<std::size_t>(v)];
}

namespace utf8 {

inline std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size() / 3 + 1);
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    int len = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      len = 1;
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
      cp = lead & 0x07;
    } else {
      throw RejectedInput("invalid UTF-8 lead byte at offset " + std::to_string(i), lead,
                          out.size());
    }
    if (i + len > text.size())
      throw RejectedInput("truncated UTF-8 sequence at offset " + std::to_string(i), lead,
                          out.size());
    for (int k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80)
        throw RejectedInput("invalid UTF-8 continuation at offset " + std::to_string(i + k),
                            cont, out.size());
      cp = (cp << 6) | (cont & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(char32_t cp) {
  std::string out;
  append(out, cp);
  return out;
}

}  // namespace utf8

inline constexpr char32_t kHiraganaFirst = U'ぁ';
inline constexpr char32_t kHiraganaLast = U'ゖ';
inline constexpr char32_t kSokuon = U'っ';
inline constexpr char32_t kMoraicNasal = U'ん';

constexpr bool is_hiragana(char32_t cp) { return cp >= kHiraganaFirst && cp <= kHiraganaLast; }

constexpr bool is_small_glide(char32_t cp) {
  return cp == U'ゃ' || cp == U'ゅ' || cp == U'ょ';
}

namespace detail {

struct GridCell {
  Onset onset;
  Vowel vowel;
};

// Indexed by codepoint - U+3041, through U+3096.
inline constexpr std::array<GridCell, 86> kGrid = {{
    {Onset::Zero, Vowel::A}, {Onset::Zero, Vowel::A},  // ぁ あ
    {Onset::Zero, Vowel::I}, {Onset::Zero, Vowel::I},  // ぃ い
    {Onset::Zero, Vowel::U}, {Onset::Zero, Vowel::U},  // ぅ う
    {Onset::Zero, Vowel::E}, {Onset::Zero, Vowel::E},  // ぇ え
    {Onset::Zero, Vowel::O}, {Onset::Zero, Vowel::O},  // ぉ お
    {Onset::K, Vowel::A}, {Onset::G, Vowel::A},        // か が
    {Onset::K, Vowel::I}, {Onset::G, Vowel::I},        // き ぎ
    {Onset::K, Vowel::U}, {Onset::G, Vowel::U},        // く ぐ
    {Onset::K, Vowel::E}, {Onset::G, Vowel::E},        // け げ
    {Onset::K, Vowel::O}, {Onset::G, Vowel::O},        // こ ご
    {Onset::S, Vowel::A}, {Onset::Z, Vowel::A},        // さ ざ
    {Onset::S, Vowel::I}, {Onset::Z, Vowel::I},        // し じ
    {Onset::S, Vowel::U}, {Onset::Z, Vowel::U},        // す ず
    {Onset::S, Vowel::E}, {Onset::Z, Vowel::E},        // せ ぜ
    {Onset::S, Vowel::O}, {Onset::Z, Vowel::O},        // そ ぞ
    {Onset::T, Vowel::A}, {Onset::D, Vowel::A},        // た だ
    {Onset::T, Vowel::I}, {Onset::D, Vowel::I},        // ち ぢ
    {Onset::Special, Vowel::None},                     // っ
    {Onset::T, Vowel::U}, {Onset::D, Vowel::U},        // つ づ
    {Onset::T, Vowel::E}, {Onset::D, Vowel::E},        // て で
    {Onset::T, Vowel::O}, {Onset::D, Vowel::O},        // と ど
    {Onset::N, Vowel::A}, {Onset::N, Vowel::I}, {Onset::N, Vowel::U},
    {Onset::N, Vowel::E}, {Onset::N, Vowel::O},        // な行
    {Onset::H, Vowel::A}, {Onset::B, Vowel::A}, {Onset::P, Vowel::A},  // は ば ぱ
    {Onset::H, Vowel::I}, {Onset::B, Vowel::I}, {Onset::P, Vowel::I},
    {Onset::H, Vowel::U}, {Onset::B, Vowel::U}, {Onset::P, Vowel::U},
    {Onset::H, Vowel::E}, {Onset::B, Vowel::E}, {Onset::P, Vowel::E},
    {Onset::H, Vowel::O}, {Onset::B, Vowel::O}, {Onset::P, Vowel::O},
    {Onset::M, Vowel::A}, {Onset::M, Vowel::I}, {Onset::M, Vowel::U},
    {Onset::M, Vowel::E}, {Onset::M, Vowel::O},        // ま行
    {Onset::Y, Vowel::A}, {Onset::Y, Vowel::A},        // ゃ や
    {Onset::Y, Vowel::U}, {Onset::Y, Vowel::U},        // ゅ ゆ
    {Onset::Y, Vowel::O}, {Onset::Y, Vowel::O},        // ょ よ
    {Onset::R, Vowel::A}, {Onset::R, Vowel::I}, {Onset::R, Vowel::U},
    {Onset::R, Vowel::E}, {Onset::R, Vowel::O},        // ら行
    {Onset::W, Vowel::A}, {Onset::W, Vowel::A},        // ゎ わ
    {Onset::W, Vowel::I}, {Onset::W, Vowel::E}, {Onset::W, Vowel::O},  // ゐ ゑ を
    {Onset::Special, Vowel::None},                     // ん
    {Onset::V, Vowel::U},                              // ゔ
    {Onset::K, Vowel::A}, {Onset::K, Vowel::E},        // ゕ ゖ
}};

inline GridCell grid(char32_t cp) { return kGrid[cp - kHiraganaFirst]; }

}  // namespace detail

/// One hiragana mora: a base kana, optionally followed by a small glide
/// (ゃ/ゅ/ょ), or a standalone っ/ん.
struct Mora {
  std::string surface;
  Onset onset = Onset::Zero;
  Vowel vowel = Vowel::None;
  bool is_sokuon = false;
  bool is_moraic_nasal = false;

  /// Builds a mora from one base codepoint and an optional glide.
  static Mora make(char32_t base, char32_t glide = 0) {
    Mora m;
    utf8::append(m.surface, base);
    const auto cell = detail::grid(base);
    m.onset = cell.onset;
    m.vowel = cell.vowel;
    m.is_sokuon = base == kSokuon;
    m.is_moraic_nasal = base == kMoraicNasal;
    if (glide) {
      utf8::append(m.surface, glide);
      m.vowel = detail::grid(glide).vowel;
    }
    return m;
  }

  bool is_digraph() const { return surface.size() > 3; }

  friend bool operator==(const Mora& a, const Mora& b) { return a.surface == b.surface; }
};

/// (onset, vowel) grid position. っ and ん are (special, none).
inline std::pair<Onset, Vowel> mora_features(const Mora& m) { return {m.onset, m.vowel}; }

/// A hiragana word as an ordered mora sequence.
class KanaWord {
public:
  KanaWord() = default;
  explicit KanaWord(std::vector<Mora> moras) : moras_(std::move(moras)) {}

  std::size_t size() const { return moras_.size(); }
  bool empty() const { return moras_.empty(); }
  const Mora& operator[](std::size_t i) const { return moras_[i]; }
  const Mora& back() const { return moras_.back(); }
  auto begin() const { return moras_.begin(); }
  auto end() const { return moras_.end(); }
  const std::vector<Mora>& moras() const { return moras_; }

  std::string str() const {
    std::string out;
    for (const auto& m : moras_) out += m.surface;
    return out;
  }

  /// Moras [first, first + count).
  KanaWord slice(std::size_t first, std::size_t count = std::string::npos) const {
    first = std::min(first, moras_.size());
    const auto last = count == std::string::npos ? moras_.size()
                                                 : std::min(moras_.size(), first + count);
    return KanaWord(std::vector<Mora>(moras_.begin() + first, moras_.begin() + last));
  }

  /// Drops the last n moras.
  KanaWord drop_back(std::size_t n) const {
    return slice(0, moras_.size() > n ? moras_.size() - n : 0);
  }

  bool ends_with(const KanaWord& suffix) const {
    if (suffix.size() > size()) return false;
    return std::equal(suffix.begin(), suffix.end(), moras_.end() - suffix.size());
  }

  KanaWord operator+(const KanaWord& other) const {
    auto out = moras_;
    out.insert(out.end(), other.moras_.begin(), other.moras_.end());
    return KanaWord(std::move(out));
  }

  friend bool operator==(const KanaWord& a, const KanaWord& b) { return a.moras_ == b.moras_; }

private:
  std::vector<Mora> moras_;
};

/// Splits hiragana text into moras. A small glide attaches to the base kana
/// before it; っ, ん and any other small kana stand alone.
inline KanaWord segment_moras(std::string_view text) {
  if (text.empty()) throw RejectedInput("empty kana string");
  const auto cps = utf8::decode(text);
  std::vector<Mora> moras;
  moras.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (!is_hiragana(cp)) {
      char hex[16];
      std::snprintf(hex, sizeof hex, "U+%04X", static_cast<unsigned>(cp));
      throw RejectedInput("non-hiragana codepoint " + std::string(hex) + " '" +
                              utf8::encode(cp) + "' at index " + std::to_string(i),
                          cp, i);
    }
    const bool can_take_glide = !is_small_glide(cp) && cp != kSokuon && cp != kMoraicNasal;
    if (can_take_glide && i + 1 < cps.size() && is_small_glide(cps[i + 1])) {
      moras.push_back(Mora::make(cp, cps[i + 1]));
      ++i;
    } else {
      moras.push_back(Mora::make(cp));
    }
  }
  return KanaWord(std::move(moras));
}

/// True when text is a non-empty pure-hiragana string.
inline bool is_kana_word(std::string_view text) {
  if (text.empty()) return false;
  try {
    const auto cps = utf8::decode(text);
    return std::all_of(cps.begin(), cps.end(), is_hiragana);
  } catch (const RejectedInput&) {
    return false;
  }
}

inline KanaWord operator""_kana(const char* s, std::size_t n) {
  return segment_moras(std::string_view(s, n));
}

// ---------------------------------------------------------------------------
// Edit scripts

enum class EditKind : std::uint8_t { Keep, Insert, Delete, Substitute };

inline const char* to_string(EditKind k) {
  switch (k) {
    case EditKind::Keep: return "keep";
    case EditKind::Insert: return "insert";
    case EditKind::Delete: return "delete";
    case EditKind::Substitute: return "substitute";
  }
  return "?";
}

/// source_index is the position in the source word; for an insert it is the
/// index of the source mora the new mora goes before.
struct EditOp {
  EditKind kind;
  std::size_t source_index;
  std::size_t target_index;
  std::optional<Mora> from;  // absent for Insert
  std::optional<Mora> to;    // absent for Delete

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct EditScript {
  std::vector<EditOp> ops;

  std::size_t cost() const {
    return static_cast<std::size_t>(std::count_if(
        ops.begin(), ops.end(), [](const EditOp& op) { return op.kind != EditKind::Keep; }));
  }

  std::vector<EditOp> changes() const {
    std::vector<EditOp> out;
    std::copy_if(ops.begin(), ops.end(), std::back_inserter(out),
                 [](const EditOp& op) { return op.kind != EditKind::Keep; });
    return out;
  }
};

/// Minimal unit-cost mora edit script from a to b. Among optimal scripts the
/// walk prefers delete, then insert, then substitute, then keep at each step,
/// which puts edits as far left as possible.
inline EditScript diff(const KanaWord& a, const KanaWord& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // cost[i][j] = edit distance between a[i..] and b[j..]
  std::vector<std::vector<std::size_t>> cost(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      if (i == n) {
        cost[i][j] = m - j;
      } else if (j == m) {
        cost[i][j] = n - i;
      } else {
        const std::size_t diag = cost[i + 1][j + 1] + (a[i] == b[j] ? 0 : 1);
        cost[i][j] = std::min({cost[i + 1][j] + 1, cost[i][j + 1] + 1, diag});
      }
    }
  }

  EditScript script;
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    const std::size_t here = cost[i][j];
    if (i < n && cost[i + 1][j] + 1 == here) {
      script.ops.push_back({EditKind::Delete, i, j, a[i], std::nullopt});
      ++i;
    } else if (j < m && cost[i][j + 1] + 1 == here) {
      script.ops.push_back({EditKind::Insert, i, j, std::nullopt, b[j]});
      ++j;
    } else if (!(a[i] == b[j])) {
      script.ops.push_back({EditKind::Substitute, i, j, a[i], b[j]});
      ++i;
      ++j;
    } else {
      script.ops.push_back({EditKind::Keep, i, j, a[i], b[j]});
      ++i;
      ++j;
    }
  }
  return script;
}

/// Replays a script over its source word.
inline KanaWord apply(const EditScript& script, const KanaWord& source) {
  std::vector<Mora> out;
  std::size_t next = 0;
  for (const auto& op : script.ops) {
    if (op.kind == EditKind::Insert) {
      if (op.source_index != next) throw ContractViolation("edit script out of order");
      out.push_back(*op.to);
      continue;
    }
    if (op.source_index != next || next >= source.size())
      throw ContractViolation("edit script does not match source word");
    if (op.kind == EditKind::Keep) out.push_back(source[next]);
    if (op.kind == EditKind::Substitute) out.push_back(*op.to);
    ++next;
  }
  if (next != source.size()) throw ContractViolation("edit script does not cover source word");
  return KanaWord(std::move(out));
}

}  // namespace jpast

#endif  // JPAST_KANA_HPP
