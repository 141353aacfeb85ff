#pragma once

// Philox 4x64-10 counter-based generator (Salmon et al., SC'11). Streams are
// addressed by (seed, substream) through the key words, so any substream can
// be regenerated independently and in parallel with bit-identical output.

#include <array>
#include <cstdint>

namespace gptcones {

namespace philox_detail {

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

}  // namespace philox_detail

inline std::array<std::uint64_t, 4> philox4x64_block(std::array<std::uint64_t, 4> ctr,
                                                     std::array<std::uint64_t, 2> key) {
    constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ULL;
    constexpr std::uint64_t kM1 = 0xCA5A826395121157ULL;
    constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ULL;
    constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73BULL;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kW0;
            key[1] += kW1;
        }
        std::uint64_t hi0, lo0, hi1, lo1;
        philox_detail::mulhilo(kM0, ctr[0], hi0, lo0);
        philox_detail::mulhilo(kM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

class PhiloxStream {
  public:
    PhiloxStream(std::uint64_t seed, std::uint64_t substream)
        : key_{seed, substream}, ctr_{0, 0, 0, 0} {}

    std::uint64_t next_u64() {
        if (pos_ == 4) {
            if (++ctr_[0] == 0 && ++ctr_[1] == 0 && ++ctr_[2] == 0) ++ctr_[3];
            buffer_ = philox4x64_block(ctr_, key_);
            pos_ = 0;
        }
        return buffer_[pos_++];
    }

    // Uniform in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = n * (~std::uint64_t{0} / n);
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r < limit) return r % n;
        }
    }

    bool next_bit() { return next_u64() & 1; }

  private:
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> ctr_;
    std::array<std::uint64_t, 4> buffer_{};
    int pos_ = 4;
};

}  // namespace gptcones
