#pragma once

// Exact integer algebra on Z^3: checked 128-bit arithmetic, vectors, bases,
// column Hermite normal form and coordinate solving.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubiclat {

using Int = __int128;

/// Base class of every error raised by the library.
class LatticeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A checked operation left the 128-bit range.
class OverflowError : public LatticeError {
public:
    using LatticeError::LatticeError;
};

/// A precondition on the mathematical input was violated
/// (e.g. d^2 does not divide |v|^2, zero vector, imprimitive vector).
class DomainError : public LatticeError {
public:
    using LatticeError::LatticeError;
};

/// A generating set did not reach the required rank.
class RankError : public DomainError {
public:
    RankError(int achieved, int required);
    int achieved() const noexcept { return achieved_; }
    int required() const noexcept { return required_; }

private:
    int achieved_;
    int required_;
};

/// A brute-force enumeration was asked to go beyond its configured bound.
class BoundError : public DomainError {
public:
    using DomainError::DomainError;
};

namespace checked {

Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);
/// Exact division; throws std::logic_error when b does not divide a.
Int div_exact(Int a, Int b);

} // namespace checked

Int abs(Int a);
Int gcd(Int a, Int b);
/// Floor division and the matching non-negative remainder (b > 0).
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

struct ExtGcd {
    Int g; // non-negative
    Int s;
    Int t; // s*a + t*b == g
};
ExtGcd ext_gcd(Int a, Int b);

/// Integer square root (floor) of n >= 0.
Int isqrt(Int n);
/// Exact cube root of |n| if |n| is a perfect cube.
std::optional<Int> icbrt_exact(Int n);

std::string to_string(Int v);
std::int64_t to_i64(Int v);

/// Exact integer 3-vector.
class IntVec3 {
public:
    constexpr IntVec3() = default;
    constexpr IntVec3(Int x, Int y, Int z) : c_{x, y, z} {}

    constexpr Int x() const { return c_[0]; }
    constexpr Int y() const { return c_[1]; }
    constexpr Int z() const { return c_[2]; }
    constexpr Int operator[](std::size_t i) const { return c_[i]; }
    constexpr Int& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

    friend bool operator==(const IntVec3&, const IntVec3&) = default;
    friend std::strong_ordering operator<=>(const IntVec3& a, const IntVec3& b);

    static IntVec3 unit(int i);

private:
    std::array<Int, 3> c_{};
};

IntVec3 operator+(const IntVec3& a, const IntVec3& b);
IntVec3 operator-(const IntVec3& a, const IntVec3& b);
IntVec3 operator-(const IntVec3& a);
IntVec3 operator*(Int k, const IntVec3& a);
/// Exact componentwise division; throws std::logic_error on a remainder.
IntVec3 div_exact(const IntVec3& a, Int k);
bool divisible(const IntVec3& a, Int k);

std::ostream& operator<<(std::ostream& os, const IntVec3& v);
std::string to_string(const IntVec3& v);

Int dot(const IntVec3& a, const IntVec3& b);
Int norm2(const IntVec3& a);
IntVec3 cross(const IntVec3& a, const IntVec3& b);
Int triple(const IntVec3& a, const IntVec3& b, const IntVec3& c);

/// gcd of the coordinates (0 for the zero vector).
Int content(const IntVec3& a);
bool is_primitive(const IntVec3& a);

struct PrimitivePart {
    Int k;
    IntVec3 u;
};
/// a == k*u with k = content(a) > 0 and u primitive. Rejects the zero vector.
PrimitivePart primitive_part(const IntVec3& a);

using Mat3 = std::array<std::array<Int, 3>, 3>;

/// Ordered triple of column vectors spanning a finite-index sublattice of Z^3.
class Basis3 {
public:
    /// Throws RankError when the columns are linearly dependent.
    Basis3(const IntVec3& a, const IntVec3& b, const IntVec3& c);

    static Basis3 identity();
    static Basis3 scaled_identity(Int k);

    const IntVec3& col(std::size_t i) const { return cols_[i]; }
    const std::array<IntVec3, 3>& cols() const { return cols_; }
    Int det() const { return det_; }
    Int index() const { return abs(det_); }

    /// B * x
    IntVec3 apply(const IntVec3& x) const;
    Basis3 scaled(Int k) const;

    friend bool operator==(const Basis3& a, const Basis3& b) { return a.cols_ == b.cols_; }

private:
    std::array<IntVec3, 3> cols_;
    Int det_;
};

std::ostream& operator<<(std::ostream& os, const Basis3& b);

/// Basis in canonical column Hermite normal form: lower triangular, positive
/// diagonal, entries left of the diagonal reduced into [0, diagonal).
class HnfBasis3 {
public:
    const Basis3& basis() const { return basis_; }
    const IntVec3& col(std::size_t i) const { return basis_.col(i); }
    Int index() const { return basis_.index(); }

    friend bool operator==(const HnfBasis3& a, const HnfBasis3& b) { return a.basis_ == b.basis_; }
    friend std::strong_ordering operator<=>(const HnfBasis3& a, const HnfBasis3& b);

private:
    friend HnfBasis3 hnf_of_generators(std::span<const IntVec3> gens);
    explicit HnfBasis3(Basis3 b) : basis_(std::move(b)) {}
    Basis3 basis_;
};

std::ostream& operator<<(std::ostream& os, const HnfBasis3& h);

/// Gram matrix: entry (i,j) = col_i . col_j.
Mat3 gram(const Basis3& b);
Int det(const Mat3& m);
bool is_scalar(const Mat3& m, Int s);

/// Canonical HNF of the lattice generated by `gens`. Throws RankError
/// (carrying the achieved rank) when the generators do not span rank 3.
HnfBasis3 hnf_of_generators(std::span<const IntVec3> gens);
HnfBasis3 hnf(const Basis3& b);

/// Rank-2 variant working on coordinate pairs; returns the two HNF columns
/// (lower triangular 2x2, positive diagonal, reduced off-diagonal).
using IntVec2 = std::array<Int, 2>;
std::array<IntVec2, 2> hnf2_of_generators(std::span<const IntVec2> gens);

/// Integer coordinates of `a` in the basis, or nullopt when a is not a member.
std::optional<IntVec3> coords_in_basis(const Basis3& b, const IntVec3& a);
bool contains(const Basis3& b, const IntVec3& a);

/// Largest d with d^2 | n (n >= 1).
Int max_square_divisor(Int n);

/// Positive divisors of n >= 1 in ascending order.
std::vector<Int> divisors(Int n);

/// Prime factors of n >= 1 ascending, with multiplicity (trial division).
std::vector<Int> prime_factors(Int n);
bool is_prime(Int n);

} // namespace cubiclat
