#include "toricqh/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace toricqh {

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

bool is_integral(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

LatticeVector to_lattice(const RationalVector& v) {
    LatticeVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integral(v[i])) throw std::logic_error("to_lattice: non-integral coordinate");
        out[i] = boost::multiprecision::numerator(v[i]);
    }
    return out;
}

Integer content(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return abs(g);
}

LatticeVector primitive_direction(const RationalVector& v) {
    Integer l = 1;
    for (const auto& q : v) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(q)));
    LatticeVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
    }
    Integer g = content(out);
    if (g == 0) throw std::logic_error("primitive_direction: zero vector");
    for (auto& x : out) x /= g;
    return out;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
    if (is_integral(q)) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::optional<Rational> parse_rational(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = n;
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (i == end) return std::nullopt;

    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::size_t& pos, std::string& out) {
        std::size_t start = pos;
        while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
        return pos > start;
    };

    std::string whole;
    bool have_whole = digits(i, whole);
    Rational value;
    if (i < end && text[i] == '/') {
        if (!have_whole) return std::nullopt;
        ++i;
        std::string den;
        if (!digits(i, den) || i != end) return std::nullopt;
        Integer d(den);
        if (d == 0) return std::nullopt;
        value = Rational(Integer(whole), d);
    } else {
        std::string frac;
        if (i < end && text[i] == '.') {
            ++i;
            digits(i, frac);
        }
        if ((!have_whole && frac.empty()) || i != end) return std::nullopt;
        Integer scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        Integer num((whole.empty() ? std::string("0") : whole) + frac);
        value = Rational(num, scale);
    }
    return negative ? Rational(-value) : value;
}

namespace {

// Reduced row echelon form in place, pivoting only within the first `cols`
// columns (extra columns ride along as right-hand sides).
std::vector<std::size_t> echelon(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = Rational(1) / m[row][col];
        const std::size_t width = m[row].size();
        for (std::size_t j = col; j < width; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t j = col; j < width; ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    return echelon(m, cols).size();
}

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

std::vector<RationalVector> kernel(RationalMatrix m, std::size_t cols) {
    const auto pivots = echelon(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(RationalMatrix m, const RationalVector& b) {
    const std::size_t n = m.size();
    for (std::size_t r = 0; r < n; ++r) m[r].push_back(b[r]);
    const auto pivots = echelon(m, n);
    if (pivots.size() != n) return std::nullopt;
    RationalVector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = m[r][n];
    return x;
}

}  // namespace toricqh
