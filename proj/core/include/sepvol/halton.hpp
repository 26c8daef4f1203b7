#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sepvol {

/// How the per-base digit permutations were produced. The provenance (and
/// seed, when applicable) is echoed verbatim in every run report so that a
/// result can be regenerated exactly.
enum class Scrambling { Identity, Faure, Seeded };

const char* to_string(Scrambling s);
Scrambling scrambling_from_string(std::string_view name);

/// One digit bijection per prime base. perms[d] is a permutation of
/// {0, ..., bases[d]-1}.
struct DigitPermutationSet {
    Scrambling provenance = Scrambling::Identity;
    std::uint64_t seed = 0;  // meaningful only for Scrambling::Seeded
    std::vector<std::uint32_t> bases;
    std::vector<std::vector<std::uint16_t>> perms;

    int dimension() const { return static_cast<int>(bases.size()); }
};

/// First `dimension` primes, one per coordinate. Throws std::invalid_argument
/// if dimension exceeds the stored prime table.
std::span<const std::uint32_t> prime_bases(int dimension);

/// Build the digit permutations for the first `dimension` prime bases.
///
/// Identity leaves every digit in place. Faure is the classical recursive
/// family (sigma_2 = (0,1); even b doubles, odd b inserts the middle value).
/// Seeded derives each base's permutation from a splitmix64 stream keyed by
/// (seed, base), so the set is a pure function of its arguments.
DigitPermutationSet make_permutations(Scrambling provenance, int dimension,
                                      std::uint64_t seed = 0);

/// Permuted radical inverse of `index` in `base`:
///   sum_k perm[d_k] * base^-(k+1)   where   index = sum_k d_k * base^k.
///
/// The implicit tail of zero digits is scrambled as well, so a permutation
/// with perm[0] != 0 contributes the geometric tail perm[0] * b^-K / (b - 1).
/// For index >= 1 the result is strictly inside (0, 1).
double radical_inverse(std::uint64_t index, std::uint32_t base,
                       std::span<const std::uint16_t> perm);

/// Random-access scrambled Halton points in (0,1)^m. point(i) is a pure
/// function of (i, permutations); any index range may be evaluated
/// independently on any worker and merged deterministically.
class HaltonStream {
  public:
    HaltonStream(int dimension, DigitPermutationSet perms,
                 std::uint64_t start_index = 1);

    int dimension() const { return dimension_; }
    std::uint64_t start_index() const { return start_index_; }
    const DigitPermutationSet& permutations() const { return perms_; }

    /// Fill `out` (size = dimension) with point number `index` (index >= 1;
    /// index 0 is never emitted, its point sits on measure singularities).
    void point(std::uint64_t index, std::span<double> out) const;

    std::vector<double> point(std::uint64_t index) const;

  private:
    int dimension_;
    DigitPermutationSet perms_;
    std::uint64_t start_index_;
};

}  // namespace sepvol
