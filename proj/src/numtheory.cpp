#include "cubiclat/numtheory.hpp"

namespace cubiclat {

namespace {

Int pow_mod(Int base, Int exp, Int mod) {
    Int result = 1;
    base = floor_mod(base, mod);
    while (exp > 0) {
        if (exp & 1) result = checked::mul(result, base) % mod;
        base = checked::mul(base, base) % mod;
        exp >>= 1;
    }
    return result;
}

// Square root of -1 mod p for p = 1 (mod 4).
Int sqrt_minus_one(Int p) {
    for (Int g = 2; g < p; ++g) {
        Int x = pow_mod(g, (p - 1) / 4, p);
        if (checked::mul(x, x) % p == p - 1) return x;
    }
    for (Int x = 1; x < p; ++x)
        if (checked::mul(x, x) % p == p - 1) return x;
    throw std::logic_error("no square root of -1 modulo " + to_string(p));
}

// (.., bp + 1) completion shared by both residue classes: given x^2 + y^2 = ap - 1,
// choose b = -a/2 (mod p) so that p^2 divides the squared length.
IntVec3 complete(Int x, Int y, Int p) {
    Int a = checked::div_exact(checked::add(checked::add(checked::mul(x, x), checked::mul(y, y)), 1), p);
    Int half = (p + 1) / 2; // inverse of 2 mod p
    Int b = floor_mod(checked::neg(checked::mul(a, half)), p);
    return {x, y, checked::add(checked::mul(b, p), 1)};
}

Mat3 as_matrix(const Basis3& b) {
    Mat3 m{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = b.col(j)[i];
    return m;
}

Basis3 as_basis(const Mat3& m) {
    return {{m[0][0], m[1][0], m[2][0]}, {m[0][1], m[1][1], m[2][1]}, {m[0][2], m[1][2], m[2][2]}};
}

Mat3 transpose_times(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) r[i][j] = checked::add(r[i][j], checked::mul(a[k][i], b[k][j]));
    return r;
}

} // namespace

IntVec3 prime_vector(Int p) {
    if (p == 2) throw DomainError("no primitive vector has squared length divisible by 4");
    if (!is_prime(p)) throw DomainError(to_string(p) + " is not an odd prime");

    IntVec3 w;
    if (p % 4 == 1) {
        Int x = sqrt_minus_one(p);
        IntVec3 t = complete(x, 0, p);
        w = {0, t[0], t[2]};
    } else {
        // -1 is not a square; some x^2 + y^2 = -1 (mod p) exists by counting residues.
        bool found = false;
        for (Int x = 1; x < p && !found; ++x)
            for (Int y = 1; y < p && !found; ++y)
                if ((x * x + y * y + 1) % p == 0) {
                    w = complete(x, y, p);
                    found = true;
                }
        if (!found) throw std::logic_error("no x^2 + y^2 = -1 modulo " + to_string(p));
    }
    w = primitive_part(w).u;
    if (norm2(w) % (p * p) != 0) throw std::logic_error("prime vector has wrong squared length");
    return w;
}

ReverseTrace reverse_construct(const IntVec3& v, Int d) {
    if (v.is_zero() || !is_primitive(v)) throw DomainError("vector " + to_string(v) + " is not primitive");
    if (d < 1) throw DomainError("d must be positive");
    if (d % 2 == 0) throw DomainError("d must be odd");

    IntVec3 cur = v;
    Mat3 cert = as_matrix(Basis3::identity());
    std::vector<ReverseStep> steps;
    for (Int p : prime_factors(d)) {
        if (p == 1) continue;
        IntVec3 w0 = prime_vector(p);
        std::size_t i = 0, j = 0;
        while (cur[i] % p == 0) ++i;
        while (w0[j] % p == 0) ++j;
        std::array<std::size_t, 3> perm{0, 1, 2};
        std::swap(perm[i], perm[j]);
        IntVec3 w{w0[perm[0]], w0[perm[1]], w0[perm[2]]};

        // w and its reflection in axis i cannot both be orthogonal to cur mod p:
        // their dot products differ by 2 cur_i w_i.
        bool flip = dot(cur, w) % p == 0;
        if (flip) w[i] = checked::neg(w[i]);
        if (dot(cur, w) % p == 0) throw std::logic_error("p divides v.w after the sign flip");

        CubicLattice g = gamma(w, p);
        auto after = coords_in_basis(g.basis, checked::mul(p, p) * cur);
        if (!after) throw std::logic_error("p^2 v is not in Gamma(w,p)");
        if (!is_primitive(*after)) throw std::logic_error("lifted vector is not primitive");

        steps.push_back({p, w, perm, flip, i, g.basis, cur, *after});
        cert = transpose_times(as_matrix(g.basis), cert);
        cur = *after;
    }

    Basis3 certificate = as_basis(cert);
    Int d2 = checked::mul(d, d);
    if (certificate.apply(v) != cur) throw std::logic_error("certificate does not map v to u");
    if (!is_scalar(gram(certificate), d2)) throw std::logic_error("certificate is not a cubic basis");
    if (norm2(cur) != checked::mul(d2, norm2(v))) throw std::logic_error("u has the wrong squared length");
    for (const auto& c : certificate.cols())
        if (!gamma_membership_def(cur, d, c)) throw std::logic_error("certificate leaves Gamma(u,d)");
    return {v, d, std::move(steps), cur, certificate};
}

IntVec3 scale_down(const IntVec3& t, Int d) {
    if (t.is_zero() || !is_primitive(t)) throw DomainError("triple " + to_string(t) + " is not coprime");
    // Gamma(t,1) is Z^3, whose natural cubic basis is the standard one.
    if (d == 1) return t;
    CubicLattice g = gamma(t, d);
    auto c = coords_in_basis(g.basis, t);
    if (!c) throw std::logic_error("t is not in Gamma(t,d)");
    return *c;
}

IntVec3 scale_up(const IntVec3& t, Int d) {
    if (t.is_zero() || !is_primitive(t)) throw DomainError("triple " + to_string(t) + " is not coprime");
    return reverse_construct(t, d).u;
}

bool coprime_three_squares_necessary(Int m) {
    if (m < 1) throw DomainError("m must be positive");
    return m % 4 != 0 && m % 8 != 7;
}

} // namespace cubiclat
