#include "sepvol/halton.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

using namespace sepvol;

namespace {

std::span<const std::uint16_t> perm_of(const DigitPermutationSet& s, int d) {
    return s.perms[static_cast<std::size_t>(d)];
}

}  // namespace

TEST_SUITE("halton") {

TEST_CASE("radical inverse, identity permutation") {
    const auto id2 = make_permutations(Scrambling::Identity, 1);
    const auto id3 = make_permutations(Scrambling::Identity, 2);
    CHECK(radical_inverse(1, 2, perm_of(id2, 0)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(radical_inverse(3, 2, perm_of(id2, 0)) == doctest::Approx(0.75).epsilon(1e-15));
    // 5 = 2*1 + 1*3: digits (2,1) reflect to 2/3 + 1/9 = 7/9
    CHECK(radical_inverse(5, 3, perm_of(id3, 1)) ==
          doctest::Approx(7.0 / 9.0).epsilon(1e-15));
    CHECK(radical_inverse(0, 2, perm_of(id2, 0)) == 0.0);
}

TEST_CASE("first points of the 2-dimensional stream") {
    HaltonStream stream(2, make_permutations(Scrambling::Identity, 2));
    const auto p1 = stream.point(1);
    CHECK(p1[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p1[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    const auto p2 = stream.point(2);
    CHECK(p2[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p2[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("identity-scrambled stream equals unscrambled values everywhere") {
    const auto id = make_permutations(Scrambling::Identity, 4);
    for (std::uint64_t i = 1; i <= 2000; ++i)
        for (int d = 0; d < 4; ++d) {
            // classical van der Corput by digit reversal
            double x = 0.0, scale = 1.0 / id.bases[static_cast<std::size_t>(d)];
            for (std::uint64_t n = i; n > 0; n /= id.bases[static_cast<std::size_t>(d)]) {
                x += static_cast<double>(n % id.bases[static_cast<std::size_t>(d)]) * scale;
                scale /= id.bases[static_cast<std::size_t>(d)];
            }
            CHECK(radical_inverse(i, id.bases[static_cast<std::size_t>(d)], perm_of(id, d)) ==
                  doctest::Approx(x).epsilon(1e-15));
        }
}

TEST_CASE("permutation construction") {
    SUBCASE("identity maps") {
        const auto s = make_permutations(Scrambling::Identity, 3);
        for (int d = 0; d < 3; ++d)
            for (std::uint32_t v = 0; v < s.bases[static_cast<std::size_t>(d)]; ++v)
                CHECK(perm_of(s, d)[v] == v);
    }
    SUBCASE("seeded sets are reproducible and seed-sensitive") {
        const auto a = make_permutations(Scrambling::Seeded, 15, 42);
        const auto b = make_permutations(Scrambling::Seeded, 15, 42);
        const auto c = make_permutations(Scrambling::Seeded, 15, 43);
        CHECK(a.perms == b.perms);
        CHECK(a.perms != c.perms);
    }
    SUBCASE("every provenance yields bijections on every base") {
        for (const auto prov :
             {Scrambling::Identity, Scrambling::Faure, Scrambling::Seeded}) {
            const auto s = make_permutations(prov, 15, 7);
            for (int d = 0; d < 15; ++d) {
                std::set<std::uint16_t> seen(perm_of(s, d).begin(), perm_of(s, d).end());
                CHECK(seen.size() == s.bases[static_cast<std::size_t>(d)]);
                CHECK(*seen.rbegin() == s.bases[static_cast<std::size_t>(d)] - 1);
            }
        }
    }
    SUBCASE("faure small bases match the classical family") {
        const auto s = make_permutations(Scrambling::Faure, 3);
        CHECK(perm_of(s, 0)[0] == 0);
        CHECK(perm_of(s, 0)[1] == 1);
        const std::vector<std::uint16_t> sigma5{0, 3, 2, 1, 4};
        CHECK(std::equal(sigma5.begin(), sigma5.end(), perm_of(s, 2).begin()));
    }
}

TEST_CASE("equidistribution: first b*k values fill each 1/b bin exactly k times") {
    for (const auto prov : {Scrambling::Identity, Scrambling::Seeded}) {
        const auto s = make_permutations(prov, 4, 99);
        for (int d = 0; d < 4; ++d) {
            const std::uint32_t b = s.bases[static_cast<std::size_t>(d)];
            const std::uint64_t k = 7;
            std::vector<int> bins(b, 0);
            for (std::uint64_t i = 1; i <= b * k; ++i) {
                const double x = radical_inverse(i, b, perm_of(s, d));
                ++bins[static_cast<std::size_t>(x * b)];
            }
            for (const int c : bins) CHECK(c == static_cast<int>(k));
        }
    }
}

TEST_CASE("coordinates stay strictly inside (0,1) and means converge to 1/2") {
    HaltonStream stream(15, make_permutations(Scrambling::Seeded, 15, 5));
    std::vector<double> pt(15), mean(15, 0.0);
    const std::uint64_t n = 100000;
    for (std::uint64_t i = 1; i <= n; ++i) {
        stream.point(i, pt);
        for (int d = 0; d < 15; ++d) {
            CHECK(pt[static_cast<std::size_t>(d)] > 0.0);
            CHECK(pt[static_cast<std::size_t>(d)] < 1.0);
            mean[static_cast<std::size_t>(d)] += pt[static_cast<std::size_t>(d)];
        }
    }
    for (int d = 0; d < 15; ++d)
        CHECK(std::abs(mean[static_cast<std::size_t>(d)] / static_cast<double>(n) - 0.5) < 0.005);
}

TEST_CASE("random access equals chunked streaming") {
    HaltonStream stream(6, make_permutations(Scrambling::Seeded, 6, 11));
    std::vector<double> direct, chunked;
    std::vector<double> pt(6);
    for (std::uint64_t i = 1; i <= 300; ++i) {
        stream.point(i, pt);
        direct.insert(direct.end(), pt.begin(), pt.end());
    }
    for (std::uint64_t chunk = 0; chunk < 3; ++chunk)
        for (std::uint64_t i = 1 + 100 * chunk; i <= 100 * (chunk + 1); ++i) {
            stream.point(i, pt);
            chunked.insert(chunked.end(), pt.begin(), pt.end());
        }
    CHECK(direct == chunked);
}

TEST_CASE("dimension beyond the prime table is a configuration error") {
    CHECK_THROWS_AS(make_permutations(Scrambling::Identity, 1000),
                    std::invalid_argument);
    CHECK_THROWS_AS(HaltonStream(3, make_permutations(Scrambling::Identity, 2)),
                    std::invalid_argument);
}

}  // TEST_SUITE
