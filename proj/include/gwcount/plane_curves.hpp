// Plane curves through prescribed points, by exact determinant expansion.
#pragma once

#include "gwcount/exact.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gwcount {

struct PlanePoint {
    Rational x;
    Rational y;
};

/// Monomial X^i Y^j stored as (i, j).
using PlaneMonomial = std::pair<int, int>;

/// Column order used for interpolation and normalization: by total degree,
/// and within degree k: X^k, Y^k, then X^(k-1) Y, ..., X Y^(k-1).
/// For d = 2 this is 1, X, Y, X^2, Y^2, XY.
std::vector<PlaneMonomial> monomial_order(int degree);

class PlanePoly {
public:
    PlanePoly() = default;
    /// Zero coefficients are dropped. Throws if a monomial exceeds `degree`.
    PlanePoly(int degree, std::map<PlaneMonomial, Rational> coeffs);

    int degree() const { return degree_; }
    const std::map<PlaneMonomial, Rational>& coeffs() const { return coeffs_; }
    Rational coefficient(int i, int j) const;
    bool is_zero() const { return coeffs_.empty(); }

    Rational evaluate(const PlanePoint& p) const;

    /// Primitive integer representative: divided by the content, with the first
    /// nonzero coefficient in monomial_order(degree) positive.
    PlanePoly normalized() const;

    friend bool operator==(const PlanePoly&, const PlanePoly&) = default;
    std::string to_string() const;

private:
    int degree_ = 0;
    std::map<PlaneMonomial, Rational> coeffs_;
};

/// Fraction-free (Bareiss) determinant after clearing row denominators.
Rational exact_determinant(const Matrix& m);

/// Expands the determinant whose first row is the symbolic monomial row and
/// whose remaining rows are the monomials evaluated at `points`. Needs exactly
/// C(d+2, 2) - 1 points; throws DomainError("degenerate_configuration") when
/// every minor vanishes. Result is normalized().
PlanePoly interpolate_curve(int degree, std::span<const PlanePoint> points);

}  // namespace gwcount
