#include "gwcount/quantum.hpp"

#include <sstream>

namespace gwcount {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(int power, Rational coeff) {
    if (power < 0) throw DomainError("invalid_exponent", "negative power of q");
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
    c.back() = std::move(coeff);
    return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QPolynomial::coefficient(int power) const {
    if (power < 0 || static_cast<std::size_t>(power) >= coeffs_.size()) return {};
    return coeffs_[static_cast<std::size_t>(power)];
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] += o.coeffs_[e];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << coeffs_[e];
            continue;
        }
        if (coeffs_[e] != Rational(1)) os << coeffs_[e] << "*";
        os << "q";
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

QClass::QClass(int ambient_dim, std::vector<QPolynomial> coeffs)
    : ambient_dim_(ambient_dim), coeffs_(std::move(coeffs)) {
    if (ambient_dim < 1) throw DomainError("invalid_dimension", "projective space dimension must be >= 1");
    if (coeffs_.size() != static_cast<std::size_t>(ambient_dim) + 1)
        throw DomainError("dimension_mismatch", "quantum class has wrong number of coefficients");
}

QClass QClass::zero(int ambient_dim) {
    if (ambient_dim < 1) throw DomainError("invalid_dimension", "projective space dimension must be >= 1");
    return QClass(ambient_dim, std::vector<QPolynomial>(static_cast<std::size_t>(ambient_dim) + 1));
}

QClass QClass::basis(int ambient_dim, int k, int power) {
    QClass c = zero(ambient_dim);
    if (k < 0 || k > ambient_dim)
        throw DomainError("invalid_basis_index", "basis index " + std::to_string(k) + " outside 0.." +
                                                     std::to_string(ambient_dim));
    c.coeffs_[static_cast<std::size_t>(k)] = QPolynomial::monomial(power, 1);
    return c;
}

QClass QClass::from_classical(const CohClass& c) {
    QClass out = zero(c.ambient_dim());
    for (int k = 0; k <= c.ambient_dim(); ++k)
        out.coeffs_[static_cast<std::size_t>(k)] = QPolynomial({c[k]});
    return out;
}

CohClass QClass::at_q_zero() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& p : coeffs_) c.push_back(p.at_zero());
    return CohClass(ambient_dim_, std::move(c));
}

QClass& QClass::operator+=(const QClass& o) {
    if (ambient_dim_ != o.ambient_dim_) throw DomainError("dimension_mismatch", "quantum classes differ in N");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

std::string QClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string c = coeffs_[k].to_string();
        const bool single = c.find(" + ") == std::string::npos;
        if (k == 0) {
            os << (single ? c : "(" + c + ")");
            continue;
        }
        if (c != "1") os << (single ? c : "(" + c + ")") << "*";
        os << "H";
        if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

QClass small_qproduct(int n, const QClass& a, const QClass& b) {
    if (a.ambient_dim() != n || b.ambient_dim() != n)
        throw DomainError("dimension_mismatch", "quantum product operands must live in P^" + std::to_string(n));
    std::vector<QPolynomial> out(static_cast<std::size_t>(n) + 1);
    const QPolynomial q = QPolynomial::monomial(1, 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j <= n; ++j) {
            if (b[j].is_zero()) continue;
            QPolynomial c = a[i] * b[j];
            if (i + j <= n) {
                out[static_cast<std::size_t>(i + j)] += c;
            } else {
                out[static_cast<std::size_t>(i + j - n - 1)] += c * q;
            }
        }
    }
    return QClass(n, std::move(out));
}

const Series& BigQClass::basis_coefficient(int m) const {
    if (m < 0 || m > 2) throw DomainError("invalid_basis_index", "P^2 index must be 0, 1 or 2");
    return dual_coeffs.at(static_cast<std::size_t>(2 - m));
}

QClass BigQClass::at_origin() const {
    std::vector<QPolynomial> coeffs;
    for (int m = 0; m <= 2; ++m) {
        const Series& s = basis_coefficient(m);
        std::vector<Rational> poly(static_cast<std::size_t>(s.bounds()[0]) + 1);
        for (const auto& [e, c] : s.terms())
            if (e[1] == 0) poly[static_cast<std::size_t>(e[0])] = c;
        coeffs.emplace_back(std::move(poly));
    }
    return QClass(2, std::move(coeffs));
}

CohClass BigQClass::classical_limit() const { return at_origin().at_q_zero(); }

BigQClass big_qproduct_p2(int i, int j, const P2Potential& p) {
    // The dual basis of (1, L, pt) is (pt, L, 1): gamma^k = gamma_{2-k}.
    const auto duals = dual_basis(2);
    BigQClass out;
    for (int k = 0; k <= 2; ++k) {
        if (duals[static_cast<std::size_t>(k)] != CohClass::basis(2, 2 - k))
            throw DomainError("internal_error", "unexpected dual basis for P^2");
        out.dual_coeffs.push_back(phi_ijk(p, i, j, k));
    }
    return out;
}

}  // namespace gwcount
