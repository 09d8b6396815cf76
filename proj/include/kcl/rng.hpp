#pragma once

#include <array>
#include <cstdint>

// Counter-based generator (Philox4x32-10). Every random number is a pure
// function of (seed, stream, step, particle, block), so results do not
// depend on how work is split between threads.
namespace kcl::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

Counter philox4x32(Counter ctr, Key key);

std::uint64_t splitmix64(std::uint64_t& state);

// Independent 64-bit seed for a sub-task (replica, N value, ...).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

enum Stream : std::uint32_t {
  kDynamics = 0,
  kInitial = 1,
  kMcmc = 2,
  kProjection = 3,
  kScan = 4,
  kMisc = 5,
};

// Fill out[0..count) with standard normals for one (step, particle) cell.
void normals(std::uint64_t seed, std::uint32_t stream, std::uint64_t step,
             std::uint32_t particle, double* out, int count);

// Sequential view over the same generator, for serial consumers
// (MCMC proposals, random scans, projections).
class Engine {
 public:
  explicit Engine(std::uint64_t seed, std::uint32_t stream = kMisc, std::uint32_t lane = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream),
        lane_(lane) {}

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  // Uniform on the open interval (0, 1).
  double uniform();
  double normal();

  // std::uniform_random_bit_generator interface
  using result_type = std::uint32_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return 0xffffffffu; }
  result_type operator()() { return next_u32(); }

 private:
  void refill();

  Key key_;
  std::uint32_t stream_;
  std::uint32_t lane_;
  std::uint64_t block_ = 0;
  Counter buf_{};
  int pos_ = 4;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace kcl::rng
