#pragma once

// Counter-based uniform random number generation (Philox4x32-10).
//
// A stream is addressed by (seed, stream_id): the seed is the 64-bit key and
// the stream id occupies the high half of the 128-bit counter, so streams
// with distinct ids are disjoint counter ranges of the same keyed bijection.
// Each 128-bit output block yields two doubles with 53 random bits each.
// Replications of a simulation take consecutive stream ids, which makes every
// replication reproducible in isolation.

#include <array>
#include <cstdint>

namespace craps {

namespace rng_detail {

inline constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
inline constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                  std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t(kPhiloxM4x32A) * ctr[0];
        const std::uint64_t p1 = std::uint64_t(kPhiloxM4x32B) * ctr[2];
        ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
               std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
        key[0] += kPhiloxW32A;
        key[1] += kPhiloxW32B;
    }
    return ctr;
}

} // namespace rng_detail

class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
          stream_{std::uint32_t(stream_id), std::uint32_t(stream_id >> 32)} {}

    std::uint64_t seed() const {
        return (std::uint64_t(key_[1]) << 32) | key_[0];
    }
    std::uint64_t stream_id() const {
        return (std::uint64_t(stream_[1]) << 32) | stream_[0];
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_double() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const auto block = rng_detail::philox4x32_10(
            {std::uint32_t(block_index_), std::uint32_t(block_index_ >> 32),
             stream_[0], stream_[1]},
            key_);
        ++block_index_;
        spare_ = to_unit(block[2], block[3]);
        have_spare_ = true;
        return to_unit(block[0], block[1]);
    }

private:
    static double to_unit(std::uint32_t hi, std::uint32_t lo) {
        const std::uint64_t bits = (std::uint64_t(hi) << 32) | lo;
        return double(bits >> 11) * 0x1.0p-53;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> stream_;
    std::uint64_t block_index_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace craps
