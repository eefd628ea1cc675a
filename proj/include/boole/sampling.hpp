#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "boole/rational.hpp"

namespace boole {

/// Seeded source of small rationals p/q with p, q uniform in [-9, 9], q != 0.
class RationalSampler {
public:
    static constexpr int kBound = 9;

    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    Rational next() {
        const int num = component();
        int den = 0;
        while (den == 0) den = component();
        return rat(num, den);
    }

    Rational next_nonzero() {
        Rational x;
        while (x.is_zero()) x = next();
        return x;
    }

    /// (a, b); b may be zero.
    std::pair<Rational, Rational> next_pair() {
        Rational a = next();
        return {std::move(a), next()};
    }

    /// (a, b) with b redrawn until nonzero.
    std::pair<Rational, Rational> next_pair_nonzero_b() {
        Rational a = next();
        return {std::move(a), next_nonzero()};
    }

private:
    int component() { return std::uniform_int_distribution<int>(-kBound, kBound)(engine_); }

    std::mt19937_64 engine_;
};

}  // namespace boole
