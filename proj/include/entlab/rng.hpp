#pragma once

// Deterministic, portable randomness. Every random quantity in the project is
// a pure function of (master_seed, step, draw index), so runs are reproducible
// bit-for-bit within one build and to ~1e-12 across libm implementations.
//
// Pipeline, fixed by contract:
//   state0(seed, step) = mix64(mix64(seed) + GAMMA * (step + 1))
//   draw j            = mix64(state0 + (j + 1) * GAMMA)        (splitmix64)
//   uniform           = (draw >> 11) * 2^-53 + 2^-54           in (0, 1)
//   normals           = Box-Muller on consecutive uniform pairs:
//                       z0 = sqrt(-2 ln u1) cos(2 pi u2)
//                       z1 = sqrt(-2 ln u1) sin(2 pi u2)
// Matrices are filled row-major; normal #e of a stream is addressable in O(1)
// because the splitmix state walks an arithmetic progression.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entlab/errors.hpp"

namespace entlab {

inline constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// One canonical way to fork a seed (per step, per pair, per trial, ...).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return mix64(mix64(seed) + kSplitmixGamma * (salt + 1));
}

// A counter-based splitmix64 stream with O(1) random access.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t step)
        : state0_(derive_seed(master_seed, step)) {}

    std::uint64_t u64_at(std::uint64_t j) const {
        return mix64(state0_ + (j + 1) * kSplitmixGamma);
    }
    std::uint64_t next_u64() { return u64_at(cursor_++); }

    static double to_unit(std::uint64_t raw) {
        // (0,1); never 0, so log() in Box-Muller stays finite.
        return static_cast<double>(raw >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }
    double unit_at(std::uint64_t j) const { return to_unit(u64_at(j)); }
    double next_unit() { return to_unit(next_u64()); }

    // Normal #idx in this stream's Box-Muller sequence.
    double normal_at(std::uint64_t idx) const;

    std::uint64_t cursor() const { return cursor_; }

private:
    std::uint64_t state0_;
    std::uint64_t cursor_ = 0;
};

// Sequential standard-normal generator over a stream, pair-cached. Starting at
// entry `start` yields exactly normal_at(start), normal_at(start+1), ...
class NormalSource {
public:
    explicit NormalSource(const RngStream& stream, std::uint64_t start = 0)
        : stream_(stream), index_(start) {}

    double next();

private:
    RngStream stream_;
    std::uint64_t index_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
};

// n x d matrix of i.i.d. standard normals, fully determined by (seed, step).
Matrix gaussian_matrix(std::uint64_t master_seed, std::uint64_t step,
                       std::size_t n, std::size_t d);

} // namespace entlab
