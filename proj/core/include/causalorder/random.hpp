#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace causalorder {

// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter counter, Key key);
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view text);

// Independent stream per (seed, name); draw i depends only on i, so values
// do not depend on the order or number of other draws.
class Substream {
public:
    Substream(std::uint64_t seed, std::string_view name);

    // Two uniforms in (0, 1) from one counter block.
    std::array<double, 2> uniforms(std::uint64_t index) const;
    double uniform(std::uint64_t index) const { return uniforms(index)[0]; }
    // Standard normal via Box-Muller.
    double normal(std::uint64_t index) const;

private:
    Philox4x32::Key key_;
};

}  // namespace causalorder
