#ifndef FINLANG_CORE_CHOICE_HPP_
#define FINLANG_CORE_CHOICE_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace finlang {

// Source of the non-canonical choices (orbit representatives, witnesses,
// normalizing elements).  Without a seed every choice is the first candidate.
class Chooser {
 public:
  Chooser() = default;
  explicit Chooser(std::uint64_t seed) : rng_(std::mt19937_64(seed)) {}

  bool randomized() const noexcept { return rng_.has_value(); }

  std::size_t pick(std::size_t n) {
    if (!rng_ || n <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(*rng_);
  }

  template <class T>
  T const& pick_from(std::vector<T> const& v) {
    return v[pick(v.size())];
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    if (rng_) std::shuffle(v.begin(), v.end(), *rng_);
  }

 private:
  std::optional<std::mt19937_64> rng_;
};

}  // namespace finlang

#endif  // FINLANG_CORE_CHOICE_HPP_
