#pragma once

// Inclusion order on cubic sublattices.

#include <map>
#include <vector>

#include "cubiclat/cubic.hpp"

namespace cubiclat {

/// L1 is a sublattice of L2.
bool lattice_leq(const Basis3& l1, const Basis3& l2);
bool lattice_leq(const CubicLattice& l1, const CubicLattice& l2);

/// The cubic sublattices containing a primitive v, indexed by edge. Their
/// inclusion order is the divisibility order of the edges, reversed.
struct CubicFamily {
    IntVec3 v;
    Int d_max; // largest d with d^2 | |v|^2
    std::map<Int, CubicLattice> members;
};

/// Builds Gamma(v, d') for every d' | d_max and checks that inclusion
/// matches divisibility (throws std::logic_error otherwise).
CubicFamily divisor_family(const IntVec3& v);

/// Largest edge bound accepted by the bound searches.
inline constexpr Int kMaxSearchEdge = 12;

struct BoundSearch {
    std::vector<CubicLattice> bounds; // sorted by HNF
    bool unique() const { return bounds.size() == 1; }
};

/// Inclusion-minimal cubic lattices of edge <= catalog.max_edge() that
/// contain both inputs. A join exists within the bound iff the result has
/// exactly one element. Throws BoundError when the bound is outside
/// [1, kMaxSearchEdge] or too small for the search to be meaningful.
BoundSearch minimal_cubic_over(const CubicLattice& l1, const CubicLattice& l2, CubicCatalog& catalog);
BoundSearch minimal_cubic_over(const CubicLattice& l1, const CubicLattice& l2, Int edge_bound = 9);

/// Inclusion-maximal cubic lattices of edge <= the bound contained in both.
BoundSearch maximal_cubic_under(const CubicLattice& l1, const CubicLattice& l2, CubicCatalog& catalog);
BoundSearch maximal_cubic_under(const CubicLattice& l1, const CubicLattice& l2, Int edge_bound = 9);

} // namespace cubiclat
