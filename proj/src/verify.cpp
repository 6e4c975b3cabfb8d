#include "cubiclat/verify.hpp"

#include <algorithm>
#include <functional>

#include "cubiclat/cubic.hpp"
#include "cubiclat/numtheory.hpp"
#include "cubiclat/perp.hpp"
#include "cubiclat/poset.hpp"

namespace cubiclat {

std::vector<IntVec3> primitive_vectors(Int max_norm) {
    std::vector<IntVec3> out;
    Int r = isqrt(max_norm);
    for (Int x = -r; x <= r; ++x)
        for (Int y = -r; y <= r; ++y)
            for (Int z = -r; z <= r; ++z) {
                IntVec3 v{x, y, z};
                Int n = x * x + y * y + z * z;
                if (n == 0 || n > max_norm || !is_primitive(v)) continue;
                out.push_back(v);
            }
    return out;
}

namespace {

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    // Runs one case; exceptions count as failures.
    void run(const std::string& label, const std::function<bool()>& body) {
        ++result_.cases;
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = std::string(": ") + e.what();
        }
        if (!ok) {
            if (result_.failures == 0) result_.first_failure = label + why;
            ++result_.failures;
        }
    }

    CheckResult result() const { return result_; }

private:
    CheckResult result_;
};

struct Case {
    IntVec3 v;
    Int d;
};

std::string label(const IntVec3& v, Int d) { return "v=" + to_string(v) + " d=" + to_string(d); }

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::vector<CheckResult> report;
    auto vectors = primitive_vectors(opts.max_norm);
    std::vector<Case> cases;
    for (const auto& v : vectors)
        for (Int d = 2; d <= opts.max_d; ++d)
            if (norm2(v) % (d * d) == 0) cases.push_back({v, d});

    {
        Check c("perp: {e^i x v} spans v-perp and cross(b1,b2) = +-v");
        for (const auto& v : vectors)
            c.run(to_string(v), [&] {
                PlaneLattice p = perp_basis(v);
                if (p.area_vector() != v && p.area_vector() != -v) return false;
                std::vector<IntVec2> coords;
                for (int i = 0; i < 3; ++i) {
                    auto x = plane_coords(p, cross(IntVec3::unit(i), v));
                    if (!x) return false;
                    coords.push_back(*x);
                }
                auto h = hnf2_of_generators(coords);
                return h[0] == IntVec2{1, 0} && h[1] == IntVec2{0, 1};
            });
        report.push_back(c.result());
    }
    {
        Check c("phi: cross(phi_lift(v,m), v) = m on a grid of v-perp");
        for (const auto& v : vectors)
            c.run(to_string(v), [&] {
                PlaneLattice p = perp_basis(v);
                for (Int i = -2; i <= 2; ++i)
                    for (Int j = -2; j <= 2; ++j) {
                        IntVec3 m = plane_point(p, {i, j});
                        if (cross(phi_lift(v, m), v) != m) return false;
                    }
                return true;
            });
        report.push_back(c.result());
    }
    {
        Check c("M(v,d): index d and definitional membership over |a_i| <= 3d");
        for (const auto& [v, d] : cases)
            c.run(label(v, d), [&] {
                MSublattice m = m_sublattice(v, d);
                if (m.index_in_perp != d) return false;
                Int r = 3 * d;
                for (Int x = -r; x <= r; ++x)
                    for (Int y = -r; y <= r; ++y)
                        for (Int z = -r; z <= r; ++z) {
                            IntVec3 a{x, y, z};
                            if (dot(a, v) != 0) continue;
                            if (m_membership_def(v, d, a) != m_contains(m, a)) return false;
                        }
                return true;
            });
        report.push_back(c.result());
    }
    {
        Check c("Gamma(v,d): |det| = d^3, cubic Gram, d^2 Z^3 inside, membership over |a_i| <= d^2");
        for (const auto& [v, d] : cases)
            c.run(label(v, d), [&] {
                CubicLattice g = gamma(v, d);
                if (g.hnf.index() != d * d * d) return false;
                if (!is_scalar(gram(g.basis), d * d)) return false;
                for (int i = 0; i < 3; ++i)
                    if (!contains(g.hnf.basis(), (d * d) * IntVec3::unit(i))) return false;
                Int r = d * d;
                for (Int x = -r; x <= r; ++x)
                    for (Int y = -r; y <= r; ++y)
                        for (Int z = -r; z <= r; ++z) {
                            IntVec3 a{x, y, z};
                            if (gamma_membership_def(v, d, a) != contains(g.hnf.basis(), a)) return false;
                        }
                return true;
            });
        report.push_back(c.result());
    }
    {
        Check c("divisibility: d^2 | a.v, d^2 | a.b, a x b / d in Gamma");
        for (const auto& [v, d] : cases)
            c.run(label(v, d), [&] {
                CubicLattice g = gamma(v, d);
                std::vector<IntVec3> members;
                for (Int x = -1; x <= 1; ++x)
                    for (Int y = -1; y <= 1; ++y)
                        for (Int z = -1; z <= 1; ++z) members.push_back(g.hnf.basis().apply({x, y, z}));
                Int d2 = d * d;
                for (const auto& a : members) {
                    if (dot(a, v) % d2 != 0) return false;
                    for (const auto& b : members) {
                        if (dot(a, b) % d2 != 0) return false;
                        IntVec3 axb = cross(a, b);
                        if (!divisible(axb, d) || !gamma_membership_def(v, d, div_exact(axb, d))) return false;
                    }
                }
                return true;
            });
        report.push_back(c.result());
    }
    {
        Check c("uniqueness: exactly one cubic lattice of edge d contains primitive v");
        CubicCatalog catalog(opts.max_d);
        for (const auto& [v, d] : cases)
            c.run(label(v, d), [&] {
                auto all = enumerate_cubic_containing(v, d, catalog);
                return all.size() == 1 && all.front().hnf == gamma(v, d).hnf;
            });
        report.push_back(c.result());
    }
    {
        Check c("classify: recovers (k, d) of k * Gamma(v, d)");
        for (const auto& [v, d] : cases)
            for (Int k = 1; k <= 3; ++k)
                c.run(label(v, d) + " k=" + to_string(k), [&] {
                    CubicLattice l = scaled(gamma(v, d), k);
                    auto r = classify(l.basis);
                    return r && r->k == k && r->d == d && lattice_of(*r).hnf == l.hnf;
                });
        report.push_back(c.result());
    }
    {
        Check c("prime_vector: primitive with p^2 | |w|^2 for odd primes < 200");
        for (Int p = 3; p < 200; p += 2) {
            if (!is_prime(p)) continue;
            c.run("p=" + to_string(p), [&] {
                IntVec3 w = prime_vector(p);
                return is_primitive(w) && norm2(w) % (p * p) == 0;
            });
        }
        report.push_back(c.result());
    }
    {
        Check c("scale_up / scale_down round trip");
        for (const IntVec3& v : {IntVec3{1, 0, 0}, IntVec3{1, 1, 1}, IntVec3{1, 2, 2}, IntVec3{3, 4, 12}})
            for (Int d = 1; d <= opts.max_d; d += 2)
                c.run(label(v, d), [&] {
                    IntVec3 up = scale_up(v, d);
                    if (!is_primitive(up) || norm2(up) != d * d * norm2(v)) return false;
                    if (!coprime_three_squares_necessary(norm2(up))) return false;
                    IntVec3 down = scale_down(up, d);
                    std::array<Int, 3> a{abs(down[0]), abs(down[1]), abs(down[2])};
                    std::array<Int, 3> b{abs(v[0]), abs(v[1]), abs(v[2])};
                    std::sort(a.begin(), a.end());
                    std::sort(b.begin(), b.end());
                    return a == b;
                });
        report.push_back(c.result());
    }
    {
        Check c("divisor family: inclusion matches divisibility");
        for (const auto& v : vectors)
            if (max_square_divisor(norm2(v)) > 1)
                c.run(to_string(v), [&] {
                    divisor_family(v);
                    return true;
                });
        report.push_back(c.result());
    }
    return report;
}

} // namespace cubiclat
