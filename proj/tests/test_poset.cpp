#include <doctest.h>

#include <random>

#include "cubiclat/poset.hpp"
#include "cubiclat/verify.hpp"
#include "oracles.hpp"

using namespace cubiclat;

namespace {

CubicLattice cube(Int k) { return scaled(gamma({1, 0, 0}, 1), k); }

bool leq_oracle(const Basis3& a, const Basis3& b) {
    for (std::size_t i = 0; i < 3; ++i)
        if (!oracle::in_lattice(b, a.col(i))) return false;
    return true;
}

std::vector<HnfBasis3> hnfs(const BoundSearch& s) {
    std::vector<HnfBasis3> out;
    for (const auto& l : s.bounds) out.push_back(l.hnf);
    return out;
}

} // namespace

TEST_CASE("lattice_leq examples") {
    CubicLattice g = gamma({1, 2, 2}, 3);
    CHECK(lattice_leq(Basis3::scaled_identity(9), g.basis));
    CHECK(lattice_leq(scaled(g, 3).basis, Basis3::scaled_identity(3)));
    CHECK_FALSE(lattice_leq(g.basis, Basis3::scaled_identity(3)));
    CHECK(lattice_leq(cube(9), g));
}

TEST_CASE("lattice_leq is a partial order on sampled cubic lattices") {
    std::vector<CubicLattice> sample;
    for (const IntVec3& v : primitive_vectors(50))
        for (Int d = 1; d * d <= norm2(v); ++d)
            if (norm2(v) % (d * d) == 0)
                for (Int k : {1, 2, 3}) sample.push_back(scaled(gamma(v, d), k));
    std::sort(sample.begin(), sample.end(), [](const auto& a, const auto& b) { return a.hnf < b.hnf; });
    sample.erase(std::unique(sample.begin(), sample.end(), [](const auto& a, const auto& b) { return a.hnf == b.hnf; }),
                 sample.end());
    REQUIRE(sample.size() > 20);
    std::mt19937_64 rng(5);
    for (const auto& a : sample) {
        CHECK(lattice_leq(a, a));
        for (const auto& b : sample) {
            bool ab = lattice_leq(a, b);
            // Independent of the chosen basis.
            CHECK(ab == leq_oracle(oracle::random_rebasis(a.basis, rng), b.hnf.basis()));
            if (ab && lattice_leq(b, a)) CHECK(a.hnf == b.hnf);
        }
    }
    for (std::size_t i = 0; i < sample.size(); i += 3)
        for (std::size_t j = 0; j < sample.size(); j += 2)
            for (std::size_t k = 0; k < sample.size(); k += 5)
                if (lattice_leq(sample[i], sample[j]) && lattice_leq(sample[j], sample[k]))
                    CHECK(lattice_leq(sample[i], sample[k]));
}

TEST_CASE("divisor_family examples") {
    CubicFamily f = divisor_family({1, 2, 2});
    CHECK(f.d_max == 3);
    REQUIRE(f.members.size() == 2);
    CHECK(f.members.at(1).hnf.basis() == Basis3::identity());
    CHECK(f.members.at(3).hnf == gamma({1, 2, 2}, 3).hnf);

    f = divisor_family({1, 1, 1});
    CHECK(f.d_max == 1);
    CHECK(f.members.size() == 1);

    f = divisor_family({1, 1, 4});
    CHECK(f.d_max == 3);
    CHECK(f.members.size() == 2);

    CHECK_THROWS_AS(divisor_family({2, 4, 4}), DomainError);
}

TEST_CASE("divisor family inclusion mirrors divisibility") {
    for (const IntVec3& v : primitive_vectors(700)) {
        if (max_square_divisor(norm2(v)) < 4) continue;
        CubicFamily f = divisor_family(v);
        for (const auto& [a, la] : f.members)
            for (const auto& [b, lb] : f.members) CHECK(leq_oracle(la.basis, lb.basis) == (a % b == 0));
    }
}

TEST_CASE("no join of 3 Gamma and 9 Z^3") {
    CubicLattice g = gamma({1, 2, 2}, 3);
    BoundSearch s = minimal_cubic_over(scaled(g, 3), cube(9), 9);
    CHECK_FALSE(s.unique());
    std::vector<HnfBasis3> expected{g.hnf, hnf(Basis3::scaled_identity(3))};
    std::sort(expected.begin(), expected.end());
    CHECK(hnfs(s) == expected);
    CHECK_FALSE(lattice_leq(s.bounds[0], s.bounds[1]));
    CHECK_FALSE(lattice_leq(s.bounds[1], s.bounds[0]));
}

TEST_CASE("no meet of Gamma and 3 Z^3") {
    CubicLattice g = gamma({1, 2, 2}, 3);
    BoundSearch s = maximal_cubic_under(g, cube(3), 9);
    CHECK_FALSE(s.unique());
    std::vector<HnfBasis3> expected{scaled(g, 3).hnf, hnf(Basis3::scaled_identity(9))};
    std::sort(expected.begin(), expected.end());
    CHECK(hnfs(s) == expected);
}

TEST_CASE("comparable pairs have a join") {
    CubicLattice g = gamma({1, 2, 2}, 3);
    BoundSearch s = minimal_cubic_over(g, cube(1), 9);
    REQUIRE(s.unique());
    CHECK(s.bounds[0].hnf.basis() == Basis3::identity());
    s = maximal_cubic_under(g, cube(1), 9);
    REQUIRE(s.unique());
    CHECK(s.bounds[0].hnf == g.hnf);
}

TEST_CASE("the chain of index-27 steps has nothing strictly between") {
    CubicLattice g = gamma({1, 2, 2}, 3);
    std::vector<std::pair<CubicLattice, CubicLattice>> steps{
        {cube(9), g}, {g, cube(1)}, {scaled(g, 3), cube(3)}, {cube(3), cube(1)}, {scaled(g, 3), g}};
    CubicCatalog catalog(9);
    for (const auto& [lo, hi] : steps) {
        REQUIRE(lattice_leq(lo, hi));
        CHECK(lo.hnf.index() == 27 * hi.hnf.index());
        int between = 0;
        for (Int e = hi.edge(); e <= lo.edge(); ++e)
            for (const auto& c : catalog.of_edge(e))
                if (c.hnf != lo.hnf && c.hnf != hi.hnf && lattice_leq(lo.basis, c.basis) && lattice_leq(c.basis, hi.basis))
                    ++between;
        CHECK(between == 0);
        // Equivalently, the upper bound is the unique minimal one above lo.
        BoundSearch s = minimal_cubic_over(lo, lo, catalog);
        CHECK(s.unique());
    }
}

TEST_CASE("bound search rejects oversized bounds") {
    CubicLattice g = gamma({1, 2, 2}, 3);
    CHECK_THROWS_AS(minimal_cubic_over(g, g, Int(13)), BoundError);
    CHECK_THROWS_AS(maximal_cubic_under(g, g, Int(0)), BoundError);
    // Anything below both has edge divisible by lcm(3, 4) = 12.
    CHECK_THROWS_AS(maximal_cubic_under(g, cube(4), 9), BoundError);
    CHECK(maximal_cubic_under(g, cube(4), 12).bounds.size() >= 1);
}
