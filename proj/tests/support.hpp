#ifndef JPAST_TESTS_SUPPORT_HPP
#define JPAST_TESTS_SUPPORT_HPP

// Test-only helpers: random hiragana generators and independent oracles.

#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "jpast/kana.hpp"

namespace jpast::testing {

/// Random string of hiragana codepoints, glides and っ/ん included, so the
/// segmenter sees every shape.
inline std::string random_hiragana(std::mt19937_64& rng, std::size_t max_len = 8) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<std::uint32_t> cp_dist(kHiraganaFirst, kHiraganaLast);
  std::string out;
  const auto len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) utf8::append(out, static_cast<char32_t>(cp_dist(rng)));
  return out;
}

/// Random word over a small alphabet, so that random pairs share material.
inline KanaWord random_word(std::mt19937_64& rng, const std::vector<std::string>& alphabet,
                            std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  const auto len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) s += alphabet[pick(rng)];
  return segment_moras(s);
}

/// Edit distance by breadth-first search over single-mora edits, with no
/// dynamic programming. Only feasible for short words and small alphabets.
inline std::size_t brute_force_edit_distance(const KanaWord& a, const KanaWord& b) {
  using Seq = std::vector<std::string>;
  auto to_seq = [](const KanaWord& w) {
    Seq s;
    for (const auto& m : w) s.push_back(m.surface);
    return s;
  };
  const Seq start = to_seq(a), goal = to_seq(b);
  std::set<std::string> alphabet;
  for (const auto& x : start) alphabet.insert(x);
  for (const auto& x : goal) alphabet.insert(x);

  std::set<Seq> seen{start};
  std::deque<std::pair<Seq, std::size_t>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (cur == goal) return d;
    std::vector<Seq> next;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      Seq del = cur;
      del.erase(del.begin() + static_cast<std::ptrdiff_t>(i));
      next.push_back(std::move(del));
      for (const auto& sym : alphabet) {
        if (sym == cur[i]) continue;
        Seq sub = cur;
        sub[i] = sym;
        next.push_back(std::move(sub));
      }
    }
    if (cur.size() < goal.size() + start.size()) {
      for (std::size_t i = 0; i <= cur.size(); ++i)
        for (const auto& sym : alphabet) {
          Seq ins = cur;
          ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(i), sym);
          next.push_back(std::move(ins));
        }
    }
    for (auto& n : next)
      if (seen.insert(n).second) queue.emplace_back(std::move(n), d + 1);
  }
  return SIZE_MAX;
}

}  // namespace jpast::testing

#endif  // JPAST_TESTS_SUPPORT_HPP
