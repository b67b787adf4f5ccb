#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "u3t/core_rules.hpp"

namespace u3t {

// Supplier of independent uniform digits in 0..8.
class DigitSource {
public:
    virtual ~DigitSource() = default;
    virtual Digit next_digit() = 0;
};

// Uniform integer in [0, bound) from 32-bit words, by rejection: words at or
// above the largest multiple of `bound` are discarded so every residue is
// equally likely. Unlike std::uniform_int_distribution the output sequence
// is identical across standard library implementations.
template <class Engine>
std::uint32_t uniform_below(Engine& engine, std::uint32_t bound) {
    static_assert(Engine::min() == 0 && Engine::max() == 0xFFFFFFFFu, "needs a full 32-bit engine");
    const std::uint64_t span = std::uint64_t{1} << 32;
    const std::uint64_t limit = span - span % bound;
    for (;;) {
        const std::uint64_t word = engine();
        if (word < limit) return static_cast<std::uint32_t>(word % bound);
    }
}

// Deterministic for a given seed.
class SeededDigitSource final : public DigitSource {
public:
    explicit SeededDigitSource(std::uint64_t seed);

    Digit next_digit() override;
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937 engine_;
};

// Seed drawn from std::random_device.
[[nodiscard]] std::uint64_t fresh_seed();

// Replays a fixed digit script cyclically. Test and replay helper.
class ScriptedDigitSource final : public DigitSource {
public:
    explicit ScriptedDigitSource(std::vector<Digit> script);

    Digit next_digit() override;

private:
    std::vector<Digit> script_;
    std::size_t pos_ = 0;
};

}  // namespace u3t
