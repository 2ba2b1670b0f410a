#include "gwcount/series.hpp"

#include <sstream>

namespace gwcount {

Series::Series(std::vector<std::string> vars, Exponents bounds)
    : vars_(std::move(vars)), bounds_(std::move(bounds)) {
    if (vars_.size() != bounds_.size())
        throw DomainError("dimension_mismatch", "one bound per variable required");
    for (int b : bounds_)
        if (b < 0) throw DomainError("invalid_bound", "exponent bounds must be nonnegative");
}

Series Series::monomial(std::vector<std::string> vars, Exponents bounds, Exponents exponents,
                        Rational coeff) {
    Series s(std::move(vars), std::move(bounds));
    if (!s.within_bounds(exponents))
        throw DomainError("exponent_out_of_bounds", "monomial exponent exceeds the truncation bounds");
    if (!coeff.is_zero()) s.terms_.emplace(std::move(exponents), std::move(coeff));
    return s;
}

Series Series::constant(std::vector<std::string> vars, Exponents bounds, Rational value) {
    Exponents zero(vars.size(), 0);
    return monomial(std::move(vars), std::move(bounds), std::move(zero), std::move(value));
}

std::size_t Series::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw DomainError("unknown_variable", "series has no variable '" + std::string(name) + "'");
}

bool Series::within_bounds(const Exponents& e) const {
    if (e.size() != bounds_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > bounds_[i]) return false;
    return true;
}

void Series::require_compatible(const Series& o) const {
    if (vars_ != o.vars_ || bounds_ != o.bounds_)
        throw DomainError("series_mismatch", "series have different variables or bounds");
}

Rational Series::coefficient(const Exponents& exponents) const {
    if (!within_bounds(exponents))
        throw DomainError("exponent_out_of_bounds", "coefficient query outside the truncation bounds");
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational() : it->second;
}

void Series::accumulate(const Exponents& e, const Rational& c) {
    if (c.is_zero() || !within_bounds(e)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Series& Series::operator+=(const Series& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
}

Series& Series::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    a.require_compatible(b);
    Series out(a.vars_, a.bounds_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            bool keep = true;
            for (std::size_t i = 0; i < e.size() && keep; ++i) {
                e[i] = ea[i] + eb[i];
                keep = e[i] <= a.bounds_[i];
            }
            if (keep) out.accumulate(e, ca * cb);
        }
    }
    return out;
}

std::string Series::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) os << "*" << vars_[i] << "^" << e[i];
    }
    return os.str();
}

Series add(const Series& a, const Series& b) { return a + b; }
Series mul(const Series& a, const Series& b) { return a * b; }

Series derive(const Series& a, std::string_view var) {
    const std::size_t v = a.var_index(var);
    Series out(a.vars(), a.bounds());
    for (const auto& [e, c] : a.terms()) {
        if (e[v] == 0) continue;
        Exponents lowered = e;
        --lowered[v];
        out.accumulate(lowered, c * Rational(e[v]));
    }
    return out;
}

Series euler(const Series& a, std::string_view var) {
    const std::size_t v = a.var_index(var);
    Series out(a.vars(), a.bounds());
    for (const auto& [e, c] : a.terms())
        if (e[v] != 0) out.accumulate(e, c * Rational(e[v]));
    return out;
}

Series set_zero(const Series& a, std::string_view var) {
    const std::size_t v = a.var_index(var);
    Series out(a.vars(), a.bounds());
    for (const auto& [e, c] : a.terms())
        if (e[v] == 0) out.accumulate(e, c);
    return out;
}

}  // namespace gwcount
