#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <vector>

namespace stabsel {

namespace detail {

/// SplitMix64 finalizer: a bijective mix of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

}  // namespace detail

/// Derive a stream key from a master seed and an index path. Work units keyed
/// by their indices get independent streams, so results never depend on how
/// the work is scheduled across threads.
inline std::uint64_t derive_key(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> path) {
  std::uint64_t key = detail::mix64(seed + detail::kGolden);
  for (std::uint64_t p : path) {
    key = detail::mix64(key ^ (p + detail::kGolden + (key << 6) + (key >> 2)));
  }
  return key;
}

/// Counter-based random stream (SplitMix64). Each draw advances a counter and
/// mixes it, so streams are cheap to create, position-addressable, and two
/// streams with different keys are independent for all practical purposes.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : state_(key) {}

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Standard normal via Box-Muller; the paired draw is cached.
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    double u2 = next_double();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Unbiased integer in [0, bound) via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
  }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  /// Random permutation of {0, ..., n-1}.
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    shuffle(idx);
    return idx;
  }

  /// k distinct indices from {0, ..., n-1}, in draw order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k && i < n; ++i) {
      std::size_t j = i + static_cast<std::size_t>(next_below(n - i));
      std::swap(idx[i], idx[j]);
      out.push_back(idx[i]);
    }
    return out;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Registry of stream domains; keeps index paths from colliding across modules.
enum class StreamDomain : std::uint64_t {
  synth_labels = 1,
  synth_informative = 2,
  synth_redundant = 3,
  synth_noise = 4,
  synth_weights = 5,
  synth_label_noise = 6,
  split_shuffle = 7,
  forest_tree = 8,
  mda_permutation = 9,
  lime_sample = 10,
  shap_permutation = 11,
  shap_background = 12,
  valid_subsample = 13,
  convergence_experiment = 14,
  run_seed = 15,
  trades_features = 16,
  trades_weights = 17,
  trades_noise = 18,
  ensemble_member = 19,
  retrain = 20,
};

inline std::uint64_t derive_key(std::uint64_t seed, StreamDomain domain,
                                std::initializer_list<std::uint64_t> path = {}) {
  std::uint64_t key = derive_key(seed, {static_cast<std::uint64_t>(domain)});
  for (std::uint64_t p : path) key = derive_key(key, {p});
  return key;
}

}  // namespace stabsel
