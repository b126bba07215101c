#ifndef JPAST_RANDOM_HPP
#define JPAST_RANDOM_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace jpast {

/// Seeded generator whose draws are identical across standard libraries.
/// std::mt19937_64's output sequence is fixed by the standard; the
/// distributions are not, so bounded draws and shuffles are done here.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(xs[i - 1], xs[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(below(xs.size()))];
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace jpast

#endif  // JPAST_RANDOM_HPP
