#pragma once

#include <cmath>
#include <cstdint>

namespace sepvol {

/// Exact nonnegative accumulator: 128-bit fixed point with 64 fraction bits.
/// Integer addition is associative and commutative, so partial sums over any
/// partition of an index range merge to bit-identical totals regardless of
/// worker count, chunk size, or merge order. Each double contribution is
/// truncated toward zero at 2^-64, far below the estimator error budget.
/// Capacity: sums up to 2^63 (contributions must stay below 2^50 each).
class FixedAccumulator {
  public:
    void add(double x) {
        if (x <= 0.0) return;  // weights and indicators are nonnegative
        int exp = 0;
        const double m = std::frexp(x, &exp);
        // m in [0.5, 1): m * 2^53 is an exact 53-bit integer
        const auto mantissa =
            static_cast<unsigned __int128>(static_cast<std::uint64_t>(
                m * 9007199254740992.0));
        const int shift = exp - 53 + 64;
        if (shift >= 0)
            sum_ += mantissa << shift;
        else if (shift > -64)
            sum_ += mantissa >> -shift;
    }

    void merge(const FixedAccumulator& other) { sum_ += other.sum_; }

    double to_double() const {
        const auto hi = static_cast<std::uint64_t>(sum_ >> 64);
        const auto lo = static_cast<std::uint64_t>(sum_);
        return static_cast<double>(hi) + std::ldexp(static_cast<double>(lo), -64);
    }

    std::uint64_t hi_word() const { return static_cast<std::uint64_t>(sum_ >> 64); }
    std::uint64_t lo_word() const { return static_cast<std::uint64_t>(sum_); }

    static FixedAccumulator from_words(std::uint64_t hi, std::uint64_t lo) {
        FixedAccumulator a;
        a.sum_ = (static_cast<unsigned __int128>(hi) << 64) | lo;
        return a;
    }

    bool operator==(const FixedAccumulator&) const = default;

  private:
    unsigned __int128 sum_ = 0;
};

}  // namespace sepvol
