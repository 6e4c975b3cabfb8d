#include "cubiclat/cubic.hpp"

#include <algorithm>

#include "cubiclat/perp.hpp"

namespace cubiclat {

namespace {

Int square(Int d) { return checked::mul(d, d); }

void require_divides_norm(const IntVec3& v, Int d) {
    if (d < 1) throw DomainError("d must be positive");
    if (norm2(v) % square(d) != 0) throw DomainError("d² does not divide ‖v‖²");
}

// Product of the primes dividing n, except that a cofactor left after trial
// division up to 10^6 is taken whole; it has the same prime divisors.
Int prime_support(Int n) {
    n = abs(n);
    Int c = 1;
    for (Int p = 2; p * p <= n && p <= 1000000; ++p) {
        if (n % p != 0) continue;
        c *= p;
        while (n % p == 0) n /= p;
    }
    return c * n;
}

} // namespace

bool gamma_membership_def(const IntVec3& v, Int d, const IntVec3& a) {
    IntVec3 axv = cross(a, v);
    return divisible(axv, d) && divisible(cross(axv, v), square(d));
}

CubicLattice gamma(const IntVec3& v, Int d) {
    if (v.is_zero()) throw DomainError("vector must be nonzero");
    if (!is_primitive(v)) throw DomainError("vector " + to_string(v) + " is not primitive; use gamma_any");
    require_divides_norm(v, d);

    MSublattice m = m_sublattice(v, d);
    std::array<IntVec3, 3> gens{v, phi_lift(v, d * m.plane.b1), phi_lift(v, d * m.plane.b2)};
    HnfBasis3 h = hnf_of_generators(gens);
    if (h.index() != checked::mul(square(d), d)) throw std::logic_error("Gamma(v,d) index differs from d^3");
    auto basis = cubic_basis_extract(h.basis());
    if (!basis) throw std::logic_error("no cubic basis found in Gamma(v,d)");
    return {*basis, h, 1, d, v};
}

CubicLattice scaled(const CubicLattice& lattice, Int k) {
    if (k < 1) throw DomainError("scale factor must be positive");
    Basis3 b = lattice.basis.scaled(k);
    return {b, hnf(lattice.hnf.basis().scaled(k)), checked::mul(k, lattice.k), lattice.d, lattice.v};
}

std::vector<Decomposition> decompositions(const IntVec3& v, Int d) {
    auto [k, u] = primitive_part(v);
    require_divides_norm(v, d);
    Int nu = norm2(u);
    std::vector<Decomposition> out;
    auto divs = divisors(d);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        Int d2 = *it;
        Int d1 = d / d2;
        if (k % d1 == 0 && nu % square(d2) == 0) out.push_back({d1, d2});
    }
    return out;
}

CubicLattice gamma_for(const IntVec3& v, const Decomposition& dec) {
    auto [k, u] = primitive_part(v);
    if (k % dec.d1 != 0 || norm2(u) % square(dec.d2) != 0)
        throw DomainError("invalid decomposition for " + to_string(v));
    CubicLattice l = scaled(gamma(u, dec.d2), dec.d1);
    if (!contains(l.hnf.basis(), v)) throw std::logic_error("d1 * Gamma(u,d2) does not contain v");
    return l;
}

CubicLattice gamma_any(const IntVec3& v, Int d) {
    auto decs = decompositions(v, d);
    // Never empty once d^2 | |v|^2: each prime power of d splits between k and |u|^2.
    if (decs.empty()) throw std::logic_error("no decomposition of d found");
    return gamma_for(v, decs.front());
}

std::vector<IntVec3> sphere_points(Int n) {
    std::vector<IntVec3> out;
    if (n < 0) return out;
    Int r = isqrt(n);
    for (Int x = -r; x <= r; ++x) {
        Int rx = n - x * x;
        Int ry = isqrt(rx);
        for (Int y = -ry; y <= ry; ++y) {
            Int rem = rx - y * y;
            Int z = isqrt(rem);
            if (z * z != rem) continue;
            out.emplace_back(x, y, -z);
            if (z != 0) out.emplace_back(x, y, z);
        }
    }
    return out;
}

std::optional<Basis3> cubic_basis_extract(const Basis3& lattice) {
    auto e = icbrt_exact(lattice.det());
    if (!e) return std::nullopt;
    Int e2 = square(*e);

    std::vector<IntVec3> members;
    for (const auto& p : sphere_points(e2))
        if (contains(lattice, p)) members.push_back(p);
    if (members.empty()) return std::nullopt;

    const IntVec3& a = members.front();
    auto b = std::find_if(members.begin(), members.end(), [&](const IntVec3& x) { return dot(a, x) == 0; });
    if (b == members.end()) return std::nullopt;
    IntVec3 axb = cross(a, *b);
    if (!divisible(axb, *e)) return std::nullopt;
    IntVec3 c = div_exact(axb, *e);
    if (!contains(lattice, c)) return std::nullopt;

    Basis3 out(a, *b, c);
    if (!is_scalar(gram(out), e2)) throw std::logic_error("extracted basis is not orthogonal");
    return out;
}

CubicLattice lattice_of(const ClassifyResult& r) { return scaled(gamma(r.v, r.d), r.k); }

std::optional<ClassifyResult> classify(const Basis3& b) {
    Int k = 0;
    for (const auto& c : b.cols()) k = gcd(k, content(c));
    auto e = icbrt_exact(b.det());
    if (!e || *e % k != 0) return std::nullopt;
    Int d = *e / k;

    Basis3 reduced(div_exact(b.col(0), k), div_exact(b.col(1), k), div_exact(b.col(2), k));
    HnfBasis3 h = hnf(reduced);
    IntVec3 v = gcd3_witness(h.col(0), h.col(1), h.col(2));
    if (!is_primitive(v)) throw std::logic_error("gcd3 witness is not primitive");
    if (norm2(v) % square(d) != 0) return std::nullopt;

    if (hnf(gamma(v, d).hnf.basis().scaled(k)) != hnf(b)) return std::nullopt;
    return ClassifyResult{k, d, v};
}

IntVec3 gcd2_witness(const IntVec3& v1, const IntVec3& v2) {
    IntVec3 n = cross(v1, v2);
    if (n.is_zero()) throw DomainError("gcd2_witness needs linearly independent vectors");

    Int k = gcd(content(v1), content(v2));
    IntVec3 r1 = div_exact(v1, k);
    IntVec3 r2 = div_exact(v2, k);
    auto [k1, u1] = primitive_part(r1);
    auto [k2, u2] = primitive_part(r2);

    // Writing u2 = a u1 + b w for any w completing u1 to a basis of the plane
    // lattice Z^3 cap span(v1, v2), b is det(u1, u2) in plane coordinates.
    PlaneLattice plane = perp_basis(primitive_part(n).u);
    auto pq = plane_coords(plane, u1);
    auto xy = plane_coords(plane, u2);
    if (!pq || !xy) throw std::logic_error("vectors outside their own plane lattice");
    auto [p, q] = *pq;
    auto [x, y] = *xy;
    Int b = checked::sub(checked::mul(p, y), checked::mul(q, x));

    Int g = abs(b);
    Int kk = checked::mul(k1, k2);
    for (Int h = gcd(g, kk); h > 1; h = gcd(g, kk)) g /= h;
    Int c = prime_support(g);

    IntVec3 out = c * v1 + v2;
    if (content(out) != k) throw std::logic_error("gcd2 witness has wrong content");
    return out;
}

IntVec3 gcd3_witness(const IntVec3& v1, const IntVec3& v2, const IntVec3& v3) {
    if (triple(v1, v2, v3) == 0) {
        int rank = cross(v1, v2).is_zero() && cross(v1, v3).is_zero() && cross(v2, v3).is_zero() ? 1 : 2;
        throw RankError(rank, 3);
    }
    return gcd2_witness(gcd2_witness(v1, v2), v3);
}

const std::vector<CubicCandidate>& CubicCatalog::of_edge(Int e) {
    if (e < 1 || e > max_edge_)
        throw BoundError("edge " + to_string(e) + " outside enumeration bound " + to_string(max_edge_));
    if (auto it = cache_.find(e); it != cache_.end()) return it->second;

    std::vector<IntVec3> pts;
    for (const auto& p : sphere_points(square(e))) {
        // One representative per +-pair: first nonzero coordinate positive.
        Int lead = p[0] != 0 ? p[0] : (p[1] != 0 ? p[1] : p[2]);
        if (lead > 0) pts.push_back(p);
    }
    std::map<HnfBasis3, Basis3> found;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (dot(pts[i], pts[j]) != 0) continue;
            IntVec3 axb = cross(pts[i], pts[j]);
            if (!divisible(axb, e)) continue;
            Basis3 b(pts[i], pts[j], div_exact(axb, e));
            found.try_emplace(hnf(b), b);
        }
    }
    std::vector<CubicCandidate> out;
    out.reserve(found.size());
    for (auto& [h, b] : found) out.push_back({b, h});
    return cache_.emplace(e, std::move(out)).first->second;
}

std::vector<CubicLattice> enumerate_cubic_containing(const IntVec3& v, Int d, CubicCatalog& catalog) {
    if (v.is_zero()) throw DomainError("vector must be nonzero");
    require_divides_norm(v, d);
    std::vector<CubicLattice> out;
    for (const auto& cand : catalog.of_edge(d)) {
        if (!contains(cand.hnf.basis(), v)) continue;
        auto r = classify(cand.basis);
        if (!r) throw std::logic_error("enumerated lattice failed classification");
        out.push_back({cand.basis, cand.hnf, r->k, r->d, r->v});
    }
    return out;
}

std::vector<CubicLattice> enumerate_cubic_containing(const IntVec3& v, Int d, Int max_edge) {
    CubicCatalog catalog(max_edge);
    return enumerate_cubic_containing(v, d, catalog);
}

} // namespace cubiclat
