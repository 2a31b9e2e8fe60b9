#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace jpneo {

// Invalid arguments, bad configs, violated preconditions.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed bitstreams. Carries the byte offset where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (offset " + std::to_string(offset) + ")"), offset(offset) {}
    size_t offset;
};

// Training diverged (NaN loss). Carries the step at which it happened.
class TrainingFailure : public std::runtime_error {
public:
    TrainingFailure(const std::string& msg, int64_t step)
        : std::runtime_error(msg + " (step " + std::to_string(step) + ")"), step(step) {}
    int64_t step;
};

// Checkpoint/config incompatibilities.
class IncompatibleError : public std::runtime_error {
public:
    explicit IncompatibleError(const std::string& msg) : std::runtime_error(msg) {}
};

inline double round_half_away(double x) {
    return x < 0.0 ? -std::floor(-x + 0.5) : std::floor(x + 0.5);
}

template <typename T>
inline T clamp(T v, T lo, T hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

inline uint8_t to_u8(double v) {
    double r = round_half_away(v);
    return static_cast<uint8_t>(clamp(r, 0.0, 255.0));
}

// Deterministic RNG. mt19937_64 is bit-exact across platforms; the
// distributions are hand-rolled because std:: distributions are
// implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) { return gen_() % n; }

    // standard normal via Box-Muller
    double normal() {
        double u1 = uniform(), u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace jpneo
