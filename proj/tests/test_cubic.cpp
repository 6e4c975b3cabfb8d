#include <doctest.h>

#include <random>

#include "cubiclat/cubic.hpp"
#include "cubiclat/verify.hpp"
#include "oracles.hpp"

using namespace cubiclat;

namespace {

const std::array<IntVec3, 3> kEdge3Basis{IntVec3{-1, 2, 2}, IntVec3{2, -1, 2}, IntVec3{2, 2, -1}};

bool is_cubic_basis(const Basis3& b, Int e) { return is_scalar(gram(b), e * e); }

// Literal reading of the definition: d | a x v and d^2 | (a x v) x v.
bool defining_property(const IntVec3& v, Int d, const IntVec3& a) {
    IntVec3 c = cross(a, v);
    return divisible(c, d) && divisible(cross(c, v), d * d);
}

} // namespace

TEST_CASE("gamma examples") {
    CubicLattice g = gamma({5, 5, 2}, 3);
    CHECK(oracle::same_up_to_signed_permutation(oracle::cols(g.basis), kEdge3Basis));
    CHECK(g.k == 1);
    CHECK(g.d == 3);
    CHECK(g.edge() == 3);
    CHECK(g.v == IntVec3{5, 5, 2});
    CHECK(coords_in_basis(Basis3(kEdge3Basis[0], kEdge3Basis[1], kEdge3Basis[2]), {5, 5, 2}) == IntVec3{1, 1, 2});
    CHECK(contains(g.hnf.basis(), {5, 5, 2}));

    CHECK(gamma({1, 0, 0}, 1).hnf.basis() == Basis3::identity());

    g = gamma({1, 2, 2}, 3);
    CHECK(oracle::same_up_to_signed_permutation(oracle::cols(g.basis), {IntVec3{1, 2, 2}, {2, -2, 1}, {2, 1, -2}}));
    CHECK(g.hnf.index() == 27);
}

TEST_CASE("gamma preconditions") {
    CHECK_THROWS_AS(gamma({1, 0, 0}, 2), DomainError);
    CHECK_THROWS_AS(gamma({2, 4, 4}, 3), DomainError);
    CHECK_THROWS_AS(gamma({1, 2, 2}, 0), DomainError);
    CHECK_THROWS_AS(gamma({0, 0, 0}, 1), DomainError);
}

TEST_CASE("gamma_membership_def examples") {
    CHECK(gamma_membership_def({5, 5, 2}, 3, {-1, 2, 2}));
    CHECK(gamma_membership_def({1, 2, 2}, 3, {9, 0, 0}));
    CHECK_FALSE(gamma_membership_def({1, 2, 2}, 3, {1, 0, 0}));
}

TEST_CASE("gamma index and cubic structure, counted independently") {
    for (const IntVec3& v : primitive_vectors(100)) {
        for (Int d = 2; d * d <= norm2(v); ++d) {
            if (norm2(v) % (d * d) != 0) continue;
            CubicLattice g = gamma(v, d);
            CHECK(g.hnf.index() == d * d * d);
            CHECK(is_cubic_basis(g.basis, d));
            CHECK(oracle::same_lattice(g.basis, g.hnf.basis()));
            // d^2 Z^3 lies inside, so the index is d^6 over the points in a d^2 box.
            Int counted = oracle::index_by_counting(d * d, [&](const IntVec3& a) { return defining_property(v, d, a); });
            CHECK(counted == d * d * d);
            for (int i = 0; i < 3; ++i) CHECK(oracle::in_lattice(g.basis, (d * d) * IntVec3::unit(i)));
        }
    }
}

TEST_CASE("divisibility laws on basis combinations") {
    for (const IntVec3& v : primitive_vectors(150)) {
        for (Int d = 2; d * d <= norm2(v); ++d) {
            if (norm2(v) % (d * d) != 0) continue;
            CubicLattice g = gamma(v, d);
            std::vector<IntVec3> members;
            for (Int x = -2; x <= 2; ++x)
                for (Int y = -2; y <= 2; ++y)
                    for (Int z = -2; z <= 2; ++z) members.push_back(g.basis.apply({x, y, z}));
            for (std::size_t i = 0; i < members.size(); i += 7) {
                const IntVec3& a = members[i];
                CHECK(dot(a, v) % (d * d) == 0);
                for (std::size_t j = 0; j < members.size(); j += 11) {
                    const IntVec3& b = members[j];
                    CHECK(dot(a, b) % (d * d) == 0);
                    IntVec3 c = cross(a, b);
                    REQUIRE(divisible(c, d));
                    CHECK(defining_property(v, d, div_exact(c, d)));
                }
            }
        }
    }
}

TEST_CASE("gamma_any") {
    CubicLattice g = gamma_any({5, 0, 0}, 5);
    CHECK(g.hnf.basis() == Basis3::scaled_identity(5));
    CHECK(g.k == 5);
    CHECK(g.d == 1);

    g = gamma_any({2, 4, 4}, 3);
    CHECK(g.hnf == gamma({1, 2, 2}, 3).hnf);
    CHECK(g.k == 1);

    g = gamma_any({2, 4, 4}, 6);
    CHECK(g.hnf == scaled(gamma({1, 2, 2}, 3), 2).hnf);
    CHECK(g.k == 2);
    CHECK(g.d == 3);
    CHECK(g.edge() == 6);
    CHECK(contains(g.hnf.basis(), {2, 4, 4}));

    auto decs = decompositions({2, 4, 4}, 6);
    REQUIRE(decs.size() == 1);
    CHECK(decs[0].d1 == 2);
    CHECK(decs[0].d2 == 3);

    CHECK_THROWS_AS(gamma_any({1, 0, 0}, 2), DomainError);
    CHECK_THROWS_AS(gamma_any({0, 0, 0}, 1), DomainError);
}

TEST_CASE("gamma_any contains v and has edge d for imprimitive inputs") {
    for (const IntVec3& u : primitive_vectors(30))
        for (Int k = 1; k <= 6; ++k) {
            IntVec3 v = k * u;
            for (Int d = 1; d * d <= norm2(v); ++d) {
                if (norm2(v) % (d * d) != 0) continue;
                CubicLattice g = gamma_any(v, d);
                CHECK(g.edge() == d);
                CHECK(is_cubic_basis(g.basis, d));
                CHECK(oracle::in_lattice(g.basis, v));
            }
        }
}

TEST_CASE("cubic_basis_extract") {
    auto b = cubic_basis_extract(gamma({5, 5, 2}, 3).hnf.basis());
    REQUIRE(b.has_value());
    CHECK(oracle::same_up_to_signed_permutation(oracle::cols(*b), kEdge3Basis));

    b = cubic_basis_extract(Basis3::scaled_identity(5));
    REQUIRE(b.has_value());
    CHECK(oracle::same_up_to_signed_permutation(oracle::cols(*b), {IntVec3{5, 0, 0}, {0, 5, 0}, {0, 0, 5}}));

    b = cubic_basis_extract(hnf(Basis3({5, 0, 0}, {0, 3, 4}, {0, 4, -3})).basis());
    REQUIRE(b.has_value());
    CHECK(oracle::same_up_to_signed_permutation(oracle::cols(*b), {IntVec3{5, 0, 0}, {0, 3, 4}, {0, 4, -3}}));
    CHECK(cross(b->col(0), b->col(1)) == 5 * b->col(2));

    // det 8 is a cube, but c = a x b / 2 falls outside.
    CHECK_FALSE(cubic_basis_extract(Basis3({1, 0, 0}, {0, 1, 0}, {0, 0, 8})).has_value());
    CHECK_FALSE(cubic_basis_extract(Basis3({1, 0, 0}, {0, 1, 0}, {0, 0, 2})).has_value());
}

TEST_CASE("sphere points") {
    auto pts = sphere_points(9);
    CHECK(pts.size() == 30);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const auto& p : pts) CHECK(norm2(p) == 9);
    CHECK(sphere_points(7).empty());
    CHECK(sphere_points(0) == std::vector<IntVec3>{{0, 0, 0}});
}

TEST_CASE("classify examples") {
    auto r = classify(Basis3({5, 0, 0}, {0, 3, 4}, {0, 4, -3}));
    REQUIRE(r.has_value());
    CHECK(r->k == 1);
    CHECK(r->d == 5);
    CHECK(oracle::greatest_divisor(r->v) == 1);
    CHECK(oracle::in_lattice(Basis3({5, 0, 0}, {0, 3, 4}, {0, 4, -3}), r->v));

    r = classify(Basis3::scaled_identity(3));
    REQUIRE(r.has_value());
    CHECK(r->k == 3);
    CHECK(r->d == 1);
    CHECK(lattice_of(*r).hnf.basis() == Basis3::scaled_identity(3));

    r = classify(Basis3({-2, 4, 4}, {4, -2, 4}, {4, 4, -2}));
    REQUIRE(r.has_value());
    CHECK(r->k == 2);
    CHECK(r->d == 3);
    CHECK(lattice_of(*r).hnf == scaled(gamma({5, 5, 2}, 3), 2).hnf);

    CHECK_FALSE(classify(Basis3({1, 0, 0}, {0, 1, 0}, {0, 0, 2})).has_value());
    CHECK_FALSE(classify(Basis3({1, 0, 0}, {0, 1, 0}, {0, 0, 8})).has_value());
    CHECK_FALSE(classify(Basis3({1, 1, 0}, {0, 1, 1}, {1, 0, 1})).has_value());
}

TEST_CASE("classify round trip on re-based scaled lattices") {
    std::mt19937_64 rng(7);
    for (const IntVec3& v : primitive_vectors(60))
        for (Int d = 1; d * d <= norm2(v); ++d) {
            if (norm2(v) % (d * d) != 0) continue;
            for (Int k = 1; k <= 3; ++k) {
                CubicLattice l = scaled(gamma(v, d), k);
                Basis3 b = oracle::random_rebasis(l.basis, rng);
                auto r = classify(b);
                REQUIRE(r.has_value());
                CHECK(r->k == k);
                CHECK(r->d == d);
                CHECK(oracle::same_lattice(lattice_of(*r).basis, b));
            }
        }
}

TEST_CASE("gcd witnesses") {
    CHECK(gcd2_witness({3, 0, 0}, {5, 10, 0}) == IntVec3{11, 10, 0});
    CHECK(gcd2_witness({1, 0, 0}, {0, 2, 0}) == IntVec3{1, 2, 0});
    CHECK(oracle::greatest_divisor(gcd2_witness({2, 0, 0}, {0, 3, 0})) == 1);
    CHECK_THROWS_AS(gcd2_witness({1, 2, 3}, {-2, -4, -6}), DomainError);

    CHECK(oracle::greatest_divisor(gcd3_witness({2, 0, 0}, {0, 2, 0}, {0, 0, 4})) == 2);
    CHECK(oracle::greatest_divisor(gcd3_witness({3, 0, 0}, {0, 3, 0}, {0, 0, 3})) == 3);
    CHECK(oracle::greatest_divisor(gcd3_witness({2, 0, 0}, {0, 3, 0}, {0, 0, 5})) == 1);
    CHECK_THROWS_AS(gcd3_witness({1, 0, 0}, {0, 1, 0}, {1, 1, 0}), DomainError);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-30, 30);
    for (int n = 0; n < 400; ++n) {
        IntVec3 a{c(rng), c(rng), c(rng)}, b{c(rng), c(rng), c(rng)}, e{c(rng), c(rng), c(rng)};
        if (triple(a, b, e) == 0) continue;
        Basis3 basis(a, b, e);
        IntVec3 w2 = gcd2_witness(a, b);
        CHECK(oracle::greatest_divisor(w2) == oracle::gcd_int(oracle::greatest_divisor(a), oracle::greatest_divisor(b)));
        CHECK(triple(a, b, w2) == 0);
        IntVec3 w3 = gcd3_witness(a, b, e);
        CHECK(oracle::greatest_divisor(w3) ==
              oracle::gcd_int(oracle::gcd_int(oracle::greatest_divisor(a), oracle::greatest_divisor(b)),
                              oracle::greatest_divisor(e)));
        CHECK(oracle::in_lattice(basis, w3));
    }
}

TEST_CASE("enumerate_cubic_containing") {
    auto all = enumerate_cubic_containing({5, 5, 2}, 3);
    REQUIRE(all.size() == 1);
    CHECK(all[0].hnf == gamma({5, 5, 2}, 3).hnf);

    all = enumerate_cubic_containing({5, 0, 0}, 5);
    auto has = [&](const Basis3& b) {
        HnfBasis3 h = hnf(b);
        return std::any_of(all.begin(), all.end(), [&](const CubicLattice& l) { return l.hnf == h; });
    };
    CHECK(all.size() >= 2);
    CHECK(has(Basis3::scaled_identity(5)));
    CHECK(has(Basis3({5, 0, 0}, {0, 3, 4}, {0, 4, -3})));
    for (const auto& l : all) {
        CHECK(l.edge() == 5);
        CHECK(oracle::in_lattice(l.basis, {5, 0, 0}));
    }

    CHECK(enumerate_cubic_containing({1, 2, 2}, 3).size() == 1);
    CHECK_THROWS_AS(enumerate_cubic_containing({0, 0, 13}, 13), BoundError);
    CHECK_THROWS_AS(enumerate_cubic_containing({1, 0, 0}, 2), DomainError);
}

TEST_CASE("uniqueness for primitive vectors, exhaustive for d <= 7") {
    CubicCatalog catalog(7);
    for (const IntVec3& v : primitive_vectors(200))
        for (Int d = 2; d <= 7; ++d) {
            if (norm2(v) % (d * d) != 0) continue;
            auto all = enumerate_cubic_containing(v, d, catalog);
            REQUIRE(all.size() == 1);
            CHECK(all[0].hnf == gamma(v, d).hnf);
        }
}

TEST_CASE("catalog entries are genuine cubic lattices of the requested edge") {
    CubicCatalog catalog(6);
    for (Int e = 1; e <= 6; ++e)
        for (const auto& c : catalog.of_edge(e)) {
            CHECK(is_cubic_basis(c.basis, e));
            CHECK(c.hnf == hnf(c.basis));
        }
    CHECK(catalog.of_edge(1).size() == 1);
    CHECK_THROWS_AS(catalog.of_edge(7), BoundError);
}
