// Truncated sparse multivariate formal power series over Q.
//
// Each series carries its variable names and a per-variable exponent bound.
// Terms beyond a bound are dropped by every operation, so the result of a
// product is only exact where no discarded term could have contributed;
// callers decide which window to trust.
#pragma once

#include "gwcount/exact.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gwcount {

using Exponents = std::vector<int>;

class Series {
public:
    using TermMap = std::map<Exponents, Rational>;

    Series() = default;
    /// The zero series. Bounds must be nonnegative, one per variable.
    Series(std::vector<std::string> vars, Exponents bounds);

    static Series monomial(std::vector<std::string> vars, Exponents bounds, Exponents exponents,
                           Rational coeff);
    static Series constant(std::vector<std::string> vars, Exponents bounds, Rational value);

    const std::vector<std::string>& vars() const { return vars_; }
    const Exponents& bounds() const { return bounds_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Index of a variable; throws DomainError("unknown_variable").
    std::size_t var_index(std::string_view name) const;

    /// Stored coefficient or zero. Throws for an exponent outside the bounds.
    Rational coefficient(const Exponents& exponents) const;

    /// Adds c to the coefficient at e (dropped if e exceeds the bounds).
    void accumulate(const Exponents& e, const Rational& c);

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& s);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) { return a *= Rational(-1); }
    friend Series operator*(const Rational& s, Series a) { return a *= s; }
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series&, const Series&) = default;

    std::string to_string() const;

private:
    bool within_bounds(const Exponents& e) const;
    void require_compatible(const Series& o) const;

    std::vector<std::string> vars_;
    Exponents bounds_;
    TermMap terms_;
};

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

/// Formal partial derivative in `var`.
Series derive(const Series& a, std::string_view var);

/// Multiplies each term by its exponent in `var` (the operator var * d/dvar).
Series euler(const Series& a, std::string_view var);

/// Substitutes var = 0.
Series set_zero(const Series& a, std::string_view var);

}  // namespace gwcount
