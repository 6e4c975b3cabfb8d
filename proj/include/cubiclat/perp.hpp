#pragma once

// The rank-2 lattice of integer vectors orthogonal to a primitive vector,
// the lift w -> w x v between Z^3 / Zv and that lattice, and the
// sublattice M(v,d) = { a in v-perp : d | a x v }.

#include "cubiclat/int3.hpp"

namespace cubiclat {

/// Rank-2 sublattice of Z^3 lying in the plane orthogonal to `normal`.
struct PlaneLattice {
    IntVec3 normal; // primitive
    IntVec3 b1;
    IntVec3 b2;

    /// cross(b1, b2); equals +-normal exactly when the lattice is all of normal-perp.
    IntVec3 area_vector() const { return cross(b1, b2); }
};

/// Full lattice v-perp. The basis is the rank-2 HNF of {e^i x v} taken in
/// the coordinates left after dropping the last nonzero coordinate of v.
/// Rejects zero or imprimitive v.
PlaneLattice perp_basis(const IntVec3& v);

/// Coordinates of m in the basis (b1, b2) of `plane`, or nullopt when m is
/// not an integer combination of them. m must lie in the plane.
std::optional<IntVec2> plane_coords(const PlaneLattice& plane, const IntVec3& m);
IntVec3 plane_point(const PlaneLattice& plane, const IntVec2& c);

/// Returns w with cross(w, v) == m. Among the solutions w0 + tv the one with
/// the least infinity norm is returned, ties going to the smaller t.
/// Rejects m not orthogonal to v.
IntVec3 phi_lift(const IntVec3& v, const IntVec3& m);

struct MSublattice {
    PlaneLattice plane; // basis of M(v,d); plane.normal == v
    IntVec3 v;
    Int d;
    /// |det| of the M basis measured in the perp_basis coordinates.
    Int index_in_perp;
};

/// M(v,d) for primitive v with d^2 | |v|^2. The basis is the HNF, in
/// perp_basis coordinates, of {d e^i x v, (e^i x v) x v} and d times the
/// perp basis.
MSublattice m_sublattice(const IntVec3& v, Int d);

/// Definitional membership: a . v == 0 and d | a x v.
bool m_membership_def(const IntVec3& v, Int d, const IntVec3& a);
bool m_contains(const MSublattice& m, const IntVec3& a);

} // namespace cubiclat
