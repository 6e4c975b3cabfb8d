#include "cubiclat/poset.hpp"

#include <algorithm>
#include <functional>

namespace cubiclat {

bool lattice_leq(const Basis3& l1, const Basis3& l2) {
    for (const auto& c : l1.cols())
        if (!contains(l2, c)) return false;
    return true;
}

bool lattice_leq(const CubicLattice& l1, const CubicLattice& l2) {
    return lattice_leq(l1.hnf.basis(), l2.hnf.basis());
}

CubicFamily divisor_family(const IntVec3& v) {
    if (v.is_zero() || !is_primitive(v)) throw DomainError("vector " + to_string(v) + " is not primitive");
    CubicFamily fam{v, max_square_divisor(norm2(v)), {}};
    for (Int d : divisors(fam.d_max)) fam.members.emplace(d, gamma(v, d));
    for (const auto& [a, la] : fam.members)
        for (const auto& [b, lb] : fam.members)
            if (lattice_leq(la, lb) != (a % b == 0))
                throw std::logic_error("inclusion order of the family differs from divisibility");
    return fam;
}

namespace {

// Candidates satisfying `admits`, reduced to the extremal ones: a candidate is
// dropped when another one lies strictly `beyond` it.
BoundSearch extremal(CubicCatalog& catalog, const std::vector<Int>& edges,
                     const std::function<bool(const Basis3&)>& admits,
                     const std::function<bool(const Basis3&, const Basis3&)>& beyond) {
    std::vector<const CubicCandidate*> admitted;
    for (Int e : edges)
        for (const auto& c : catalog.of_edge(e))
            if (admits(c.hnf.basis())) admitted.push_back(&c);

    BoundSearch out;
    for (const auto* c : admitted) {
        bool extremal = true;
        for (const auto* o : admitted)
            if (o->hnf != c->hnf && beyond(o->hnf.basis(), c->hnf.basis())) {
                extremal = false;
                break;
            }
        if (!extremal) continue;
        auto r = classify(c->basis);
        if (!r) throw std::logic_error("enumerated lattice failed classification");
        out.bounds.push_back({c->basis, c->hnf, r->k, r->d, r->v});
    }
    std::sort(out.bounds.begin(), out.bounds.end(),
              [](const CubicLattice& a, const CubicLattice& b) { return a.hnf < b.hnf; });
    return out;
}

void check_bound(Int edge_bound) {
    if (edge_bound < 1 || edge_bound > kMaxSearchEdge)
        throw BoundError("edge bound must lie in [1, " + to_string(kMaxSearchEdge) + "]");
}

} // namespace

BoundSearch minimal_cubic_over(const CubicLattice& l1, const CubicLattice& l2, CubicCatalog& catalog) {
    const Basis3& a = l1.hnf.basis();
    const Basis3& b = l2.hnf.basis();
    // A cubic lattice above both has an edge dividing both edges.
    Int g = gcd(l1.edge(), l2.edge());
    if (g > catalog.max_edge())
        throw BoundError("upper bounds may have edge up to " + to_string(g) + ", beyond the search bound");
    return extremal(
        catalog, divisors(g), [&](const Basis3& x) { return lattice_leq(a, x) && lattice_leq(b, x); },
        [](const Basis3& other, const Basis3& x) { return lattice_leq(other, x); });
}

BoundSearch minimal_cubic_over(const CubicLattice& l1, const CubicLattice& l2, Int edge_bound) {
    check_bound(edge_bound);
    CubicCatalog catalog(edge_bound);
    return minimal_cubic_over(l1, l2, catalog);
}

BoundSearch maximal_cubic_under(const CubicLattice& l1, const CubicLattice& l2, CubicCatalog& catalog) {
    const Basis3& a = l1.hnf.basis();
    const Basis3& b = l2.hnf.basis();
    // A cubic lattice below both has an edge divisible by both edges.
    Int l = checked::mul(l1.edge() / gcd(l1.edge(), l2.edge()), l2.edge());
    if (l > catalog.max_edge())
        throw BoundError("lower bounds need edge at least " + to_string(l) + ", beyond the search bound");
    std::vector<Int> edges;
    for (Int e = l; e <= catalog.max_edge(); e += l) edges.push_back(e);
    return extremal(
        catalog, edges, [&](const Basis3& x) { return lattice_leq(x, a) && lattice_leq(x, b); },
        [](const Basis3& other, const Basis3& x) { return lattice_leq(x, other); });
}

BoundSearch maximal_cubic_under(const CubicLattice& l1, const CubicLattice& l2, Int edge_bound) {
    check_bound(edge_bound);
    CubicCatalog catalog(edge_bound);
    return maximal_cubic_under(l1, l2, catalog);
}

} // namespace cubiclat
