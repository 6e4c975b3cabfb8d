#pragma once

// Arithmetic on top of the cubic construction: primitive vectors whose
// squared length is divisible by p^2, and moving coprime three-square
// representations between m and d^2 m.

#include <vector>

#include "cubiclat/cubic.hpp"

namespace cubiclat {

/// A primitive vector w with p^2 | |w|^2 for an odd prime p.
/// p == 2 and composite p raise DomainError.
IntVec3 prime_vector(Int p);

struct ReverseStep {
    Int p;
    IntVec3 w;                        // prime vector after permutation and sign flip
    std::array<std::size_t, 3> perm;  // w[i] = prime_vector(p)[perm[i]] (up to the flip)
    bool sign_flip;                   // coordinate `flip_axis` of w was negated
    std::size_t flip_axis;
    Basis3 cubic_basis;               // cubic basis B of Gamma(w, p)
    IntVec3 before;                   // vector entering the step
    IntVec3 after;                    // coordinates of p^2 * before in B, i.e. B^T before
};

/// Outcome of the reverse construction: u is primitive, |u|^2 = d^2 |v|^2 and
/// the columns of `certificate` form a cubic basis of Gamma(u, d) in which u
/// has coordinates v.
struct ReverseTrace {
    IntVec3 v;
    Int d;
    std::vector<ReverseStep> steps;
    IntVec3 u;
    Basis3 certificate;
};

/// Rejects imprimitive v and even or non-positive d.
ReverseTrace reverse_construct(const IntVec3& v, Int d);

/// Coordinates of t in the extracted cubic basis of Gamma(t, d):
/// a coprime triple with square sum |t|^2 / d^2.
IntVec3 scale_down(const IntVec3& t, Int d);

/// A coprime triple with square sum d^2 |t|^2, for odd d.
IntVec3 scale_up(const IntVec3& t, Int d);

/// false iff m = 0 (mod 4) or m = 7 (mod 8). Necessary for m to be a sum of
/// three coprime squares; sufficiency is not claimed.
bool coprime_three_squares_necessary(Int m);

} // namespace cubiclat
