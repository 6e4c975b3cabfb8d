#include "cubiclat/perp.hpp"

#include <algorithm>
#include <vector>

namespace cubiclat {

namespace {

void require_primitive(const IntVec3& v) {
    if (v.is_zero()) throw DomainError("vector must be nonzero");
    if (!is_primitive(v)) throw DomainError("vector " + to_string(v) + " is not primitive");
}

// Index of the coordinate dropped when projecting the plane to Z^2.
std::size_t dropped_axis(const IntVec3& normal) {
    for (std::size_t i = 3; i-- > 0;)
        if (normal[i] != 0) return i;
    throw DomainError("zero normal");
}

IntVec2 project(const IntVec3& a, std::size_t drop) {
    IntVec2 p{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != drop) p[k++] = a[i];
    return p;
}

// Recover the dropped coordinate from a . normal == 0.
IntVec3 unproject(const IntVec2& p, const IntVec3& normal, std::size_t drop) {
    IntVec3 a;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != drop) a[i] = p[k++];
    Int rest = dot(a, normal);
    a[drop] = checked::div_exact(checked::neg(rest), normal[drop]);
    return a;
}

} // namespace

PlaneLattice perp_basis(const IntVec3& v) {
    require_primitive(v);
    std::size_t drop = dropped_axis(v);
    std::vector<IntVec2> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(project(cross(IntVec3::unit(i), v), drop));
    auto h = hnf2_of_generators(gens);
    PlaneLattice plane{v, unproject(h[0], v, drop), unproject(h[1], v, drop)};
    IntVec3 area = plane.area_vector();
    if (area != v && area != -v) throw std::logic_error("perp basis does not have area |v|");
    return plane;
}

std::optional<IntVec2> plane_coords(const PlaneLattice& plane, const IntVec3& m) {
    if (dot(m, plane.normal) != 0) return std::nullopt;
    // Solve m = x b1 + y b2 through cross products: m x b2 = x (b1 x b2), b1 x m = y (b1 x b2).
    IntVec3 area = plane.area_vector();
    IntVec3 xn = cross(m, plane.b2);
    IntVec3 yn = cross(plane.b1, m);
    Int a2 = norm2(area);
    Int x = dot(xn, area);
    Int y = dot(yn, area);
    if (x % a2 != 0 || y % a2 != 0) return std::nullopt;
    return IntVec2{x / a2, y / a2};
}

IntVec3 plane_point(const PlaneLattice& plane, const IntVec2& c) { return c[0] * plane.b1 + c[1] * plane.b2; }

IntVec3 phi_lift(const IntVec3& v, const IntVec3& m) {
    require_primitive(v);
    if (dot(m, v) != 0) throw DomainError("m is not orthogonal to v");
    if (m.is_zero()) return {};

    // w = (v x m + j v) / |v|^2 for the unique class j mod |v|^2 making it integral;
    // j = -t.(v x m) where t.v == 1.
    Int n = norm2(v);
    auto e01 = ext_gcd(v[0], v[1]);
    auto e = ext_gcd(e01.g, v[2]);
    IntVec3 t{checked::mul(e.s, e01.s), checked::mul(e.s, e01.t), e.t};
    IntVec3 vm = cross(v, m);
    Int j = floor_mod(checked::neg(dot(t, vm)), n);
    IntVec3 w0 = div_exact(vm + j * v, n);

    // f(s) = |w0 + s v|_inf is convex in s, so its minimisers form an interval.
    auto f = [&](Int s) {
        IntVec3 w = w0 + s * v;
        Int best = 0;
        for (std::size_t i = 0; i < 3; ++i) best = std::max(best, abs(w[i]));
        return best;
    };
    // Every minimiser s satisfies |w0_i + s v_i| <= f(0) for each i with v_i != 0.
    Int bound = f(0);
    Int lo = 0, hi = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (v[i] == 0) continue;
        Int a = floor_div(checked::sub(checked::neg(bound), w0[i]), v[i]);
        Int b = floor_div(checked::sub(bound, w0[i]), v[i]);
        lo = std::min({lo, a, b});
        hi = std::max({hi, a + 1, b + 1});
    }
    // Least s with f(s+1) >= f(s), then the last s with the same value.
    Int first = lo, last = hi;
    while (first < last) {
        Int mid = floor_div(first + last, 2);
        if (f(mid + 1) >= f(mid))
            last = mid;
        else
            first = mid + 1;
    }
    Int fmin = f(first);
    Int a = first;
    last = hi;
    while (a < last) {
        Int mid = floor_div(a + last + 1, 2);
        if (f(mid) == fmin)
            a = mid;
        else
            last = mid - 1;
    }
    // Ties: least Euclidean norm (a convex quadratic in s), then least s.
    Int centre = floor_div(checked::neg(dot(w0, v)), norm2(v));
    Int best = std::clamp(centre, first, last);
    Int other = std::clamp(checked::add(centre, 1), first, last);
    if (norm2(w0 + other * v) < norm2(w0 + best * v)) best = other;
    return w0 + best * v;
}

bool m_membership_def(const IntVec3& v, Int d, const IntVec3& a) {
    return dot(a, v) == 0 && divisible(cross(a, v), d);
}

MSublattice m_sublattice(const IntVec3& v, Int d) {
    require_primitive(v);
    if (d < 1) throw DomainError("d must be positive");
    Int n = norm2(v);
    if (n % checked::mul(d, d) != 0) throw DomainError("d² does not divide ‖v‖²");

    PlaneLattice perp = perp_basis(v);
    std::vector<IntVec2> gens{{d, 0}, {0, d}};
    for (int i = 0; i < 3; ++i) {
        IntVec3 r = cross(IntVec3::unit(i), v);
        for (const IntVec3& g : {d * r, cross(r, v)}) {
            auto c = plane_coords(perp, g);
            if (!c) throw std::logic_error("generator outside v-perp");
            gens.push_back(*c);
        }
    }
    auto h = hnf2_of_generators(gens);
    MSublattice m{{v, plane_point(perp, h[0]), plane_point(perp, h[1])}, v, d,
                  abs(checked::sub(checked::mul(h[0][0], h[1][1]), checked::mul(h[0][1], h[1][0])))};
    if (m.index_in_perp != d) throw std::logic_error("M(v,d) index differs from d");
    for (const auto& b : {m.plane.b1, m.plane.b2})
        if (!m_membership_def(v, d, b)) throw std::logic_error("M(v,d) basis vector fails membership");
    return m;
}

bool m_contains(const MSublattice& m, const IntVec3& a) { return plane_coords(m.plane, a).has_value(); }

} // namespace cubiclat
