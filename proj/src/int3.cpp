#include "cubiclat/int3.hpp"

#include <algorithm>
#include <sstream>

namespace cubiclat {

RankError::RankError(int achieved, int required)
    : DomainError("generators span rank " + std::to_string(achieved) + ", need rank " +
                  std::to_string(required)),
      achieved_(achieved),
      required_(required) {}

namespace checked {

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Int neg(Int a) { return sub(0, a); }

Int div_exact(Int a, Int b) {
    if (b == 0) throw std::logic_error("division by zero");
    if (a % b != 0) throw std::logic_error("inexact division: " + to_string(a) + " / " + to_string(b));
    if (b == -1) return neg(a);
    return a / b;
}

} // namespace checked

Int abs(Int a) { return a < 0 ? checked::neg(a) : a; }

Int gcd(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked::sub(old_r, checked::mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked::sub(old_s, checked::mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked::sub(old_t, checked::mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
    return {old_r, old_s, old_t};
}

Int isqrt(Int n) {
    if (n < 0) throw std::logic_error("isqrt of negative number");
    if (n < 2) return n;
    // Newton iteration from an overestimate.
    Int x = n;
    Int y = (x + 1) / 2;
    if (n > (Int(1) << 100)) {
        x = Int(1) << 64;
        y = (x + n / x) / 2;
    }
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

std::optional<Int> icbrt_exact(Int n) {
    n = abs(n);
    Int lo = 0, hi = 1;
    while (hi < (Int(1) << 42) && hi * hi * hi < n) hi *= 2;
    while (lo < hi) {
        Int mid = lo + (hi - lo) / 2;
        if (mid * mid * mid < n)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo * lo * lo == n) return lo;
    return std::nullopt;
}

std::string to_string(Int v) {
    if (v == 0) return "0";
    bool negative = v < 0;
    std::string s;
    // Work on negative values so the minimum is representable.
    Int t = negative ? v : -v;
    while (t != 0) {
        s.push_back(static_cast<char>('0' - static_cast<int>(t % 10)));
        t /= 10;
    }
    if (negative) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::int64_t to_i64(Int v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value " + to_string(v) + " exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

// ---------------------------------------------------------------- IntVec3

std::strong_ordering operator<=>(const IntVec3& a, const IntVec3& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (a[i] < b[i]) return std::strong_ordering::less;
        if (a[i] > b[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

IntVec3 IntVec3::unit(int i) {
    IntVec3 e;
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

IntVec3 operator+(const IntVec3& a, const IntVec3& b) {
    return {checked::add(a[0], b[0]), checked::add(a[1], b[1]), checked::add(a[2], b[2])};
}

IntVec3 operator-(const IntVec3& a, const IntVec3& b) {
    return {checked::sub(a[0], b[0]), checked::sub(a[1], b[1]), checked::sub(a[2], b[2])};
}

IntVec3 operator-(const IntVec3& a) { return {checked::neg(a[0]), checked::neg(a[1]), checked::neg(a[2])}; }

IntVec3 operator*(Int k, const IntVec3& a) {
    return {checked::mul(k, a[0]), checked::mul(k, a[1]), checked::mul(k, a[2])};
}

IntVec3 div_exact(const IntVec3& a, Int k) {
    return {checked::div_exact(a[0], k), checked::div_exact(a[1], k), checked::div_exact(a[2], k)};
}

bool divisible(const IntVec3& a, Int k) { return a[0] % k == 0 && a[1] % k == 0 && a[2] % k == 0; }

std::ostream& operator<<(std::ostream& os, const IntVec3& v) {
    return os << '(' << to_string(v[0]) << ',' << to_string(v[1]) << ',' << to_string(v[2]) << ')';
}

std::string to_string(const IntVec3& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Int dot(const IntVec3& a, const IntVec3& b) {
    using namespace checked;
    return add(add(mul(a[0], b[0]), mul(a[1], b[1])), mul(a[2], b[2]));
}

Int norm2(const IntVec3& a) { return dot(a, a); }

IntVec3 cross(const IntVec3& a, const IntVec3& b) {
    using namespace checked;
    return {sub(mul(a[1], b[2]), mul(a[2], b[1])),
            sub(mul(a[2], b[0]), mul(a[0], b[2])),
            sub(mul(a[0], b[1]), mul(a[1], b[0]))};
}

Int triple(const IntVec3& a, const IntVec3& b, const IntVec3& c) { return dot(cross(a, b), c); }

Int content(const IntVec3& a) { return gcd(gcd(a[0], a[1]), a[2]); }

bool is_primitive(const IntVec3& a) { return content(a) == 1; }

PrimitivePart primitive_part(const IntVec3& a) {
    if (a.is_zero()) throw DomainError("zero vector has no primitive part");
    Int k = content(a);
    return {k, div_exact(a, k)};
}

// ---------------------------------------------------------------- Basis3

Basis3::Basis3(const IntVec3& a, const IntVec3& b, const IntVec3& c)
    : cols_{a, b, c}, det_(triple(a, b, c)) {
    if (det_ == 0) {
        int rank = cross(a, b).is_zero() && cross(a, c).is_zero() && cross(b, c).is_zero()
                       ? (a.is_zero() && b.is_zero() && c.is_zero() ? 0 : 1)
                       : 2;
        throw RankError(rank, 3);
    }
}

Basis3 Basis3::identity() { return scaled_identity(1); }

Basis3 Basis3::scaled_identity(Int k) { return {{k, 0, 0}, {0, k, 0}, {0, 0, k}}; }

IntVec3 Basis3::apply(const IntVec3& x) const {
    return x[0] * cols_[0] + x[1] * cols_[1] + x[2] * cols_[2];
}

Basis3 Basis3::scaled(Int k) const { return {k * cols_[0], k * cols_[1], k * cols_[2]}; }

std::ostream& operator<<(std::ostream& os, const Basis3& b) {
    return os << '{' << b.col(0) << ',' << b.col(1) << ',' << b.col(2) << '}';
}

std::ostream& operator<<(std::ostream& os, const HnfBasis3& h) { return os << h.basis(); }

std::strong_ordering operator<=>(const HnfBasis3& a, const HnfBasis3& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        auto c = a.col(i) <=> b.col(i);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Mat3 gram(const Basis3& b) {
    Mat3 g{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) g[i][j] = dot(b.col(i), b.col(j));
    return g;
}

Int det(const Mat3& m) {
    IntVec3 r0{m[0][0], m[0][1], m[0][2]};
    IntVec3 r1{m[1][0], m[1][1], m[1][2]};
    IntVec3 r2{m[2][0], m[2][1], m[2][2]};
    return triple(r0, r1, r2);
}

bool is_scalar(const Mat3& m, Int s) {
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (m[i][j] != (i == j ? s : 0)) return false;
    return true;
}

// ---------------------------------------------------------------- HNF

namespace {

template <std::size_t N>
using Col = std::array<Int, N>;

template <std::size_t N>
Col<N> combine(Int s, const Col<N>& a, Int t, const Col<N>& b) {
    Col<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = checked::add(checked::mul(s, a[i]), checked::mul(t, b[i]));
    return r;
}

// Column-style HNF of the generator columns. Returns the N pivot columns, or
// throws RankError with the number of pivots found.
template <std::size_t N>
std::array<Col<N>, N> column_hnf(std::vector<Col<N>> cols) {
    std::size_t pivots = 0;
    for (std::size_t row = 0; row < N; ++row) {
        if (pivots == cols.size()) break;
        // Bring a nonzero entry into the pivot column, preferring the smallest.
        std::size_t best = cols.size();
        for (std::size_t j = pivots; j < cols.size(); ++j)
            if (cols[j][row] != 0 && (best == cols.size() || abs(cols[j][row]) < abs(cols[best][row])))
                best = j;
        if (best == cols.size()) continue;
        std::swap(cols[pivots], cols[best]);
        for (std::size_t j = pivots + 1; j < cols.size(); ++j) {
            Int a = cols[pivots][row];
            Int b = cols[j][row];
            if (b == 0) continue;
            if (b % a == 0) {
                cols[j] = combine<N>(1, cols[j], checked::neg(b / a), cols[pivots]);
                continue;
            }
            auto [g, s, t] = ext_gcd(a, b);
            Col<N> pivot = combine<N>(s, cols[pivots], t, cols[j]);
            cols[j] = combine<N>(a / g, cols[j], checked::neg(b / g), cols[pivots]);
            cols[pivots] = pivot;
        }
        if (cols[pivots][row] < 0) cols[pivots] = combine<N>(-1, cols[pivots], 0, cols[pivots]);
        ++pivots;
    }
    if (pivots < N) throw RankError(static_cast<int>(pivots), static_cast<int>(N));

    std::array<Col<N>, N> h;
    for (std::size_t i = 0; i < N; ++i) h[i] = cols[i];
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Int q = floor_div(h[j][i], h[i][i]);
            if (q != 0) h[j] = combine<N>(1, h[j], checked::neg(q), h[i]);
        }
    }
    return h;
}

} // namespace

HnfBasis3 hnf_of_generators(std::span<const IntVec3> gens) {
    std::vector<Col<3>> cols;
    cols.reserve(gens.size());
    for (const auto& g : gens)
        if (!g.is_zero()) cols.push_back({g[0], g[1], g[2]});
    auto h = column_hnf<3>(std::move(cols));
    return HnfBasis3(Basis3({h[0][0], h[0][1], h[0][2]}, {h[1][0], h[1][1], h[1][2]},
                            {h[2][0], h[2][1], h[2][2]}));
}

HnfBasis3 hnf(const Basis3& b) { return hnf_of_generators(b.cols()); }

std::array<IntVec2, 2> hnf2_of_generators(std::span<const IntVec2> gens) {
    std::vector<Col<2>> cols;
    for (const auto& g : gens)
        if (g[0] != 0 || g[1] != 0) cols.push_back(g);
    return column_hnf<2>(std::move(cols));
}

std::optional<IntVec3> coords_in_basis(const Basis3& b, const IntVec3& a) {
    // x = adj(B) a / det(B); the rows of adj(B) are the pairwise cross products.
    const auto& c = b.cols();
    IntVec3 num{dot(cross(c[1], c[2]), a), dot(cross(c[2], c[0]), a), dot(cross(c[0], c[1]), a)};
    if (!divisible(num, b.det())) return std::nullopt;
    return div_exact(num, b.det());
}

bool contains(const Basis3& b, const IntVec3& a) { return coords_in_basis(b, a).has_value(); }

// ---------------------------------------------------------------- arithmetic

Int max_square_divisor(Int n) {
    if (n < 1) throw DomainError("max_square_divisor needs n >= 1");
    Int d = 1;
    for (Int p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            d *= p;
        }
        while (n % p == 0) n /= p;
    }
    return d;
}

std::vector<Int> divisors(Int n) {
    if (n < 1) throw DomainError("divisors needs n >= 1");
    std::vector<Int> small, large;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        small.push_back(i);
        if (i != n / i) large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Int> prime_factors(Int n) {
    if (n < 1) throw DomainError("prime_factors needs n >= 1");
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

} // namespace cubiclat
