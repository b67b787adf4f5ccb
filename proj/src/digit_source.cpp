#include "u3t/digit_source.hpp"

#include <stdexcept>

namespace u3t {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed) {
    return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

std::mt19937 make_engine(std::uint64_t seed) {
    auto seq = make_seed_seq(seed);
    return std::mt19937(seq);
}

}  // namespace

SeededDigitSource::SeededDigitSource(std::uint64_t seed) : seed_(seed), engine_(make_engine(seed)) {}

Digit SeededDigitSource::next_digit() { return Digit(static_cast<int>(uniform_below(engine_, 9))); }

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) | rd();
}

ScriptedDigitSource::ScriptedDigitSource(std::vector<Digit> script) : script_(std::move(script)) {
    if (script_.empty()) throw std::invalid_argument("digit script must not be empty");
}

Digit ScriptedDigitSource::next_digit() {
    Digit d = script_[pos_];
    pos_ = (pos_ + 1) % script_.size();
    return d;
}

}  // namespace u3t
