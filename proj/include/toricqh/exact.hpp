#pragma once

// Exact integer/rational scalars, small coordinate vectors over them, and the
// handful of dense linear-algebra routines the geometry code needs.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toricqh {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Fixed-length coordinate vector. `Vector<Integer>` lives in a lattice
/// (M or N); `Vector<Rational>` in the corresponding rational vector space.
template <typename Scalar>
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : c_(dim, Scalar(0)) {}
    Vector(std::initializer_list<Scalar> init) : c_(init) {}
    explicit Vector(std::vector<Scalar> coords) : c_(std::move(coords)) {}

    /// Lattice vector viewed in the ambient rational space.
    template <typename Other>
        requires(std::is_same_v<Scalar, Rational> && std::is_same_v<Other, Integer>)
    explicit Vector(const Vector<Other>& other) {
        c_.reserve(other.size());
        for (const auto& x : other) c_.emplace_back(x);
    }

    static Vector unit(std::size_t dim, std::size_t i) {
        Vector v(dim);
        v[i] = 1;
        return v;
    }

    std::size_t size() const noexcept { return c_.size(); }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    auto begin() const noexcept { return c_.begin(); }
    auto end() const noexcept { return c_.end(); }
    auto begin() noexcept { return c_.begin(); }
    auto end() noexcept { return c_.end(); }
    const std::vector<Scalar>& coords() const noexcept { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x == 0; });
    }

    Vector& operator+=(const Vector& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vector& operator*=(const Scalar& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector a) { return a *= s; }
    friend Vector operator-(Vector a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
    friend bool operator<(const Vector& a, const Vector& b) {
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

private:
    std::vector<Scalar> c_;
};

using LatticeVector = Vector<Integer>;
using RationalVector = Vector<Rational>;

template <typename A, typename B>
Rational pairing(const Vector<A>& a, const Vector<B>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * Rational(b[i]);
    return s;
}

inline Integer pairing(const LatticeVector& a, const LatticeVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_integral(const Rational& q);
bool is_integral(const RationalVector& v);
/// Requires is_integral(v).
LatticeVector to_lattice(const RationalVector& v);

/// Positive rescaling of a nonzero rational vector to a primitive integral one.
LatticeVector primitive_direction(const RationalVector& v);
Integer content(const LatticeVector& v);  // gcd of coordinates

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
template <typename S>
std::string to_string(const Vector<S>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

/// Parses "p", "-p", "p/q" (and finite decimals like "0.4") exactly.
std::optional<Rational> parse_rational(const std::string& text);

/// Row-major dense matrix of rationals.
using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
/// Basis of the right kernel {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<RationalVector> kernel(RationalMatrix m, std::size_t cols);
/// Solves m x = b for square nonsingular m; nullopt when singular.
std::optional<RationalVector> solve(RationalMatrix m, const RationalVector& b);

template <typename S>
RationalMatrix rows_of(const std::vector<Vector<S>>& vs) {
    RationalMatrix m;
    m.reserve(vs.size());
    for (const auto& v : vs) {
        std::vector<Rational> row;
        row.reserve(v.size());
        for (const auto& x : v) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

/// Visits all k-subsets of {0..n-1} in lexicographic order. The visitor
/// returns false to stop early.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace toricqh
