#include "sepvol/halton.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sepvol {

namespace {

// Enough primes for the 15-dimensional streams plus headroom for the
// higher-level quadrature helpers.
constexpr std::uint32_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47, 53,
                                     59, 61, 67, 71, 73, 79, 83, 89};
constexpr int kMaxDimension = static_cast<int>(std::size(kPrimes));

// splitmix64; fully specified, so seeded permutations are reproducible
// across platforms without relying on <random> distribution internals.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

std::vector<std::uint16_t> identity_perm(std::uint32_t base) {
    std::vector<std::uint16_t> p(base);
    for (std::uint32_t d = 0; d < base; ++d) p[d] = static_cast<std::uint16_t>(d);
    return p;
}

// Faure's recursive family: sigma_2 = (0,1); for even b = 2c interleave the
// doubled halves; for odd b = 2c+1 bump values >= c and insert c in the middle.
std::vector<std::uint16_t> faure_perm(std::uint32_t base) {
    if (base == 2) return {0, 1};
    std::vector<std::uint16_t> out(base);
    if (base % 2 == 0) {
        const std::uint32_t c = base / 2;
        const auto half = faure_perm(c);
        for (std::uint32_t k = 0; k < c; ++k) {
            out[k] = static_cast<std::uint16_t>(2 * half[k]);
            out[k + c] = static_cast<std::uint16_t>(2 * half[k] + 1);
        }
    } else {
        const std::uint32_t c = (base - 1) / 2;
        const auto prev = faure_perm(base - 1);
        auto bump = [c](std::uint16_t v) {
            return static_cast<std::uint16_t>(v >= c ? v + 1 : v);
        };
        for (std::uint32_t k = 0; k < c; ++k) out[k] = bump(prev[k]);
        out[c] = static_cast<std::uint16_t>(c);
        for (std::uint32_t k = c; k < base - 1; ++k) out[k + 1] = bump(prev[k]);
    }
    return out;
}

// Fisher-Yates over {1,...,b-1}, fixing digit 0. A permutation moving 0 would
// push scrambled values onto digit-bin boundaries (the zero tail sums to
// within 2^-64 of one) and could emit coordinates outside the open interval.
std::vector<std::uint16_t> seeded_perm(std::uint64_t seed, std::uint32_t base) {
    auto p = identity_perm(base);
    SplitMix64 rng{seed ^ (0x5851f42d4c957f2dull * base)};
    rng.next();
    for (std::uint32_t i = base - 1; i > 1; --i) {
        const std::uint32_t j = 1 + static_cast<std::uint32_t>(rng.next() % i);
        std::swap(p[i], p[j]);
    }
    return p;
}

}  // namespace

const char* to_string(Scrambling s) {
    switch (s) {
        case Scrambling::Identity: return "none";
        case Scrambling::Faure: return "faure";
        case Scrambling::Seeded: return "seeded";
    }
    return "?";
}

Scrambling scrambling_from_string(std::string_view name) {
    if (name == "none" || name == "identity") return Scrambling::Identity;
    if (name == "faure") return Scrambling::Faure;
    if (name == "seeded") return Scrambling::Seeded;
    throw std::invalid_argument("unknown scrambling: " + std::string(name));
}

std::span<const std::uint32_t> prime_bases(int dimension) {
    if (dimension < 1 || dimension > kMaxDimension)
        throw std::invalid_argument("dimension " + std::to_string(dimension) +
                                    " outside the stored prime table (1.." +
                                    std::to_string(kMaxDimension) + ")");
    return {kPrimes, static_cast<std::size_t>(dimension)};
}

DigitPermutationSet make_permutations(Scrambling provenance, int dimension,
                                      std::uint64_t seed) {
    const auto bases = prime_bases(dimension);
    DigitPermutationSet set;
    set.provenance = provenance;
    set.seed = provenance == Scrambling::Seeded ? seed : 0;
    set.bases.assign(bases.begin(), bases.end());
    set.perms.reserve(bases.size());
    for (const std::uint32_t b : bases) {
        switch (provenance) {
            case Scrambling::Identity: set.perms.push_back(identity_perm(b)); break;
            case Scrambling::Faure: set.perms.push_back(faure_perm(b)); break;
            case Scrambling::Seeded: set.perms.push_back(seeded_perm(seed, b)); break;
        }
    }
    return set;
}

double radical_inverse(std::uint64_t index, std::uint32_t base,
                       std::span<const std::uint16_t> perm) {
    // The significant-digit part is the exact rational N / base^K. While both
    // stay below 2^53 a single correctly-rounded division beats a digit loop,
    // whose accumulated roundoff can land values one ulp across a digit-bin
    // boundary.
    constexpr std::uint64_t kExact = 1ull << 53;
    std::uint64_t n = index;
    std::uint64_t num = 0, den = 1;
    std::uint16_t digits[80];
    int count = 0;
    while (n > 0 && den <= kExact / base) {
        digits[count++] = perm[n % base];
        n /= base;
        den *= base;
    }
    double x;
    if (n == 0) {
        for (int k = 0; k < count; ++k) num = num * base + digits[k];
        x = static_cast<double>(num) / static_cast<double>(den);
    } else {
        // indices beyond 2^53-ish fall back to the plain digit loop
        const double inv = 1.0 / base;
        double scale = inv;
        x = 0.0;
        for (std::uint64_t m = index; m > 0; m /= base) {
            x += perm[m % base] * scale;
            scale *= inv;
        }
        den = 0;
    }
    // Scramble the implicit tail of zero digits as well, truncating once the
    // digit weight drops below 2^-64; the dropped digits sit under unit
    // roundoff. Truncation (not the closed geometric sum) keeps every value
    // strictly below the next digit boundary.
    if (perm[0] != 0) {
        const double inv = 1.0 / base;
        double scale = den ? inv / static_cast<double>(den) : 0x1p-64;
        const double tail_digit = perm[0];
        while (scale > 0x1p-64) {
            x += tail_digit * scale;
            scale *= inv;
        }
    }
    return x;
}

HaltonStream::HaltonStream(int dimension, DigitPermutationSet perms,
                           std::uint64_t start_index)
    : dimension_(dimension), perms_(std::move(perms)), start_index_(start_index) {
    if (dimension < 1)
        throw std::invalid_argument("HaltonStream dimension must be positive");
    if (perms_.dimension() < dimension)
        throw std::invalid_argument("permutation table smaller than stream dimension");
    if (start_index_ < 1)
        throw std::invalid_argument("start index must be >= 1");
}

void HaltonStream::point(std::uint64_t index, std::span<double> out) const {
    if (index < 1) throw std::invalid_argument("Halton index must be >= 1");
    for (int d = 0; d < dimension_; ++d)
        out[d] = radical_inverse(index, perms_.bases[d], perms_.perms[d]);
}

std::vector<double> HaltonStream::point(std::uint64_t index) const {
    std::vector<double> out(dimension_);
    point(index, out);
    return out;
}

}  // namespace sepvol
