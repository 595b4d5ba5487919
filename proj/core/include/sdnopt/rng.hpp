#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace sdnopt {

// Splittable counter-based random streams. A stream is identified by a
// 64-bit key; keys for sub-streams (per trial, per stage, per iteration)
// are derived by hashing the parent key with the lane index, so the
// sequence drawn by any (trial, stage, iteration) is independent of how
// work is scheduled across threads.
class rng_stream {
 public:
  explicit rng_stream(std::uint64_t key) : state_(mix(key ^ kStreamSalt)) {}

  // One finalizer application; bijective on 64-bit words.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t derive(std::uint64_t parent, std::uint64_t lane) {
    return mix(parent ^ mix(lane + 0x632be59bd9b4e019ULL));
  }

  static constexpr std::uint64_t derive(std::uint64_t parent,
                                        std::initializer_list<std::uint64_t> lanes) {
    std::uint64_t k = parent;
    for (std::uint64_t lane : lanes) k = derive(k, lane);
    return k;
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (-1, 1).
  double uniform_signed() {
    return 2.0 * uniform() - 1.0;
  }

  // Standard normal via the Marsaglia polar method. Deterministic for a
  // given stream; does not depend on libstdc++ distribution internals.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = uniform_signed();
      v = uniform_signed();
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // Chi-square with integer dof, as a sum of squared normals. The model
  // only ever needs small integer dof (Student mixtures, nu >= 3).
  double chi_square(int dof) {
    double s = 0.0;
    for (int i = 0; i < dof; ++i) {
      const double g = gaussian();
      s += g * g;
    }
    return s;
  }

  // Student t with integer dof.
  double student_t(int dof) {
    return gaussian() / std::sqrt(chi_square(dof) / static_cast<double>(dof));
  }

 private:
  static constexpr std::uint64_t kStreamSalt = 0x5851f42d4c957f2dULL;
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sdnopt
