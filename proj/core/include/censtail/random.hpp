#pragma once

#include <array>
#include <cstdint>

namespace censtail {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// Stream layout is part of the output contract: bump kRngVersion when
// changing anything that alters generated values.
inline constexpr int kRngVersion = 1;

std::uint64_t splitmix64(std::uint64_t x);

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key);

class RandomStream {
public:
    // Independent stream for (seed, stream id), e.g. one per replicate.
    RandomStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    // Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform();
    double normal();

private:
    void refill();

    std::array<std::uint32_t, 2> key_{};
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int used_ = 4;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace censtail
