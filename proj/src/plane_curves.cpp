#include "gwcount/plane_curves.hpp"

#include <sstream>

namespace gwcount {

namespace {

Rational power(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

std::vector<PlaneMonomial> monomial_order(int degree) {
    if (degree < 1) throw DomainError("invalid_degree", "curve degree must be >= 1");
    std::vector<PlaneMonomial> out = {{0, 0}};
    for (int k = 1; k <= degree; ++k) {
        out.emplace_back(k, 0);
        out.emplace_back(0, k);
        for (int j = 1; j < k; ++j) out.emplace_back(k - j, j);
    }
    return out;
}

PlanePoly::PlanePoly(int degree, std::map<PlaneMonomial, Rational> coeffs) : degree_(degree) {
    if (degree < 1) throw DomainError("invalid_degree", "curve degree must be >= 1");
    for (auto& [m, c] : coeffs) {
        if (m.first < 0 || m.second < 0 || m.first + m.second > degree)
            throw DomainError("invalid_monomial", "monomial exceeds the polynomial degree");
        if (!c.is_zero()) coeffs_.emplace(m, std::move(c));
    }
}

Rational PlanePoly::coefficient(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Rational() : it->second;
}

Rational PlanePoly::evaluate(const PlanePoint& p) const {
    Rational total;
    for (const auto& [m, c] : coeffs_) total += c * power(p.x, m.first) * power(p.y, m.second);
    return total;
}

PlanePoly PlanePoly::normalized() const {
    if (coeffs_.empty()) return *this;
    BigInt den_lcm = 1;
    BigInt num_gcd = 0;
    for (const auto& [m, c] : coeffs_) {
        den_lcm = lcm(den_lcm, c.den());
        num_gcd = gcd(num_gcd, c.num());
    }
    Rational scale(den_lcm, num_gcd);
    for (const auto& m : monomial_order(degree_)) {
        auto it = coeffs_.find(m);
        if (it == coeffs_.end()) continue;
        if (it->second.sign() < 0) scale = -scale;
        break;
    }
    std::map<PlaneMonomial, Rational> out;
    for (const auto& [m, c] : coeffs_) out.emplace(m, c * scale);
    return PlanePoly(degree_, std::move(out));
}

std::string PlanePoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : monomial_order(degree_)) {
        Rational c = coefficient(m.first, m.second);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        bool bare = m.first + m.second > 0 && a == Rational(1);
        if (!bare) os << a;
        auto factor = [&](const char* var, int e) {
            if (e == 0) return;
            if (!bare) os << "*";
            bare = false;
            os << var;
            if (e > 1) os << "^" << e;
        };
        factor("X", m.first);
        factor("Y", m.second);
    }
    return os.str();
}

Rational exact_determinant(const Matrix& m) {
    if (!m.is_square()) throw DomainError("dimension_mismatch", "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Scale each row to integers; the determinant picks up the product of scales.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt scale_product = 1;
    for (std::size_t r = 0; r < n; ++r) {
        BigInt row_lcm = 1;
        for (std::size_t c = 0; c < n; ++c) row_lcm = lcm(row_lcm, m(r, c).den());
        scale_product *= row_lcm;
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).num() * (row_lcm / m(r, c).den());
    }

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return Rational(BigInt(sign * a[n - 1][n - 1]), scale_product);
}

PlanePoly interpolate_curve(int degree, std::span<const PlanePoint> points) {
    const auto monomials = monomial_order(degree);
    const std::size_t width = monomials.size();
    if (points.size() != width - 1)
        throw DomainError("wrong_point_count", "degree " + std::to_string(degree) + " needs " +
                                                   std::to_string(width - 1) + " points, got " +
                                                   std::to_string(points.size()));

    Matrix rows(width - 1, width);
    for (std::size_t r = 0; r < points.size(); ++r)
        for (std::size_t c = 0; c < width; ++c)
            rows(r, c) = power(points[r].x, monomials[c].first) * power(points[r].y, monomials[c].second);

    std::map<PlaneMonomial, Rational> coeffs;
    Matrix minor(width - 1, width - 1);
    for (std::size_t col = 0; col < width; ++col) {
        for (std::size_t r = 0; r + 1 < width; ++r)
            for (std::size_t c = 0, mc = 0; c < width; ++c)
                if (c != col) minor(r, mc++) = rows(r, c);
        Rational cofactor = exact_determinant(minor);
        if (col % 2 == 1) cofactor = -cofactor;
        coeffs.emplace(monomials[col], std::move(cofactor));
    }

    PlanePoly poly(degree, std::move(coeffs));
    if (poly.is_zero())
        throw DomainError("degenerate_configuration",
                          "points are not in general position: every maximal minor vanishes");
    return poly.normalized();
}

}  // namespace gwcount
