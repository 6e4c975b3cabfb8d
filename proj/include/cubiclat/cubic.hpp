#pragma once

// Cubic sublattices of Z^3.
//
// For primitive v and d with d^2 | |v|^2,
//
//   Gamma(v,d) = { a in Z^3 : d | a x v  and  d^2 | (a x v) x v }
//
// is the unique cubic sublattice of edge d containing v. Every cubic
// sublattice is k * Gamma(v,d) for unique k, d and some primitive v.

#include <map>
#include <vector>

#include "cubiclat/int3.hpp"

namespace cubiclat {

struct CubicLattice {
    Basis3 basis; // pairwise orthogonal columns of length edge()
    HnfBasis3 hnf;
    Int k; // gcd of all lattice vectors
    Int d;
    IntVec3 v; // primitive; the lattice equals k * Gamma(v, d)

    Int edge() const { return k * d; }
};

/// Definitional membership test for Gamma(v,d). Requires d^2 | |v|^2.
bool gamma_membership_def(const IntVec3& v, Int d, const IntVec3& a);

/// Gamma(v,d) for primitive v. The generators are v together with lifts of
/// d * M(v,d); a cubic basis is then extracted from the norm-d members.
/// Rejects imprimitive v and d^2 not dividing |v|^2.
CubicLattice gamma(const IntVec3& v, Int d);

/// k * L.
CubicLattice scaled(const CubicLattice& lattice, Int k);

struct Decomposition {
    Int d1; // divides content(v)
    Int d2; // d2^2 divides |v / content(v)|^2
};

/// All d = d1 * d2 with d1 | k and d2^2 | |u|^2, where v = k u; ordered by
/// decreasing d2.
std::vector<Decomposition> decompositions(const IntVec3& v, Int d);

/// A cubic sublattice of edge d containing any nonzero v with d^2 | |v|^2:
/// d1 * Gamma(u, d2) for the decomposition with the largest d2. When
/// gcd(content(v), d) == 1 it is the only one.
CubicLattice gamma_any(const IntVec3& v, Int d);
CubicLattice gamma_for(const IntVec3& v, const Decomposition& dec);

/// Norm-e members of the lattice spanned by `lattice`, with the
/// lexicographically least one as a, the least orthogonal survivor as b and
/// c = a x b / e. nullopt when |det| is not a cube or no such triple spans
/// the lattice.
std::optional<Basis3> cubic_basis_extract(const Basis3& lattice);

/// All v with |v|^2 == n, in lexicographic order.
std::vector<IntVec3> sphere_points(Int n);

struct ClassifyResult {
    Int k;
    Int d;
    IntVec3 v;
};

/// Decides whether the lattice spanned by `b` is cubic and if so returns the
/// unique (k, d) and a primitive witness v with lattice == k * Gamma(v,d).
std::optional<ClassifyResult> classify(const Basis3& b);
CubicLattice lattice_of(const ClassifyResult& r);

/// A vector of the lattice spanned by v1, v2 whose content equals
/// gcd(content(v1), content(v2)). Rejects parallel inputs.
IntVec3 gcd2_witness(const IntVec3& v1, const IntVec3& v2);
/// Same for three independent vectors.
IntVec3 gcd3_witness(const IntVec3& v1, const IntVec3& v2, const IntVec3& v3);

/// A cubic lattice found by enumeration, before classification.
struct CubicCandidate {
    Basis3 basis;
    HnfBasis3 hnf;
};

/// Memoised catalogue of all cubic sublattices of Z^3 by edge length, built
/// from orthogonal triples of norm-e vectors and deduplicated by HNF.
/// Not thread-safe; use one per thread.
class CubicCatalog {
public:
    explicit CubicCatalog(Int max_edge = 12) : max_edge_(max_edge) {}

    Int max_edge() const { return max_edge_; }
    /// Sorted by HNF. Throws BoundError above max_edge().
    const std::vector<CubicCandidate>& of_edge(Int e);

private:
    Int max_edge_;
    std::map<Int, std::vector<CubicCandidate>> cache_;
};

/// Every cubic sublattice of edge d containing v (d^2 | |v|^2), by brute
/// force. Sorted by HNF.
std::vector<CubicLattice> enumerate_cubic_containing(const IntVec3& v, Int d, CubicCatalog& catalog);
std::vector<CubicLattice> enumerate_cubic_containing(const IntVec3& v, Int d, Int max_edge = 12);

} // namespace cubiclat
