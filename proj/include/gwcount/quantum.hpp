// Small quantum cohomology of P^N and the big quantum product of P^2.
#pragma once

#include "gwcount/cohomology.hpp"
#include "gwcount/potential.hpp"
#include "gwcount/series.hpp"

#include <string>
#include <vector>

namespace gwcount {

/// Polynomial in q with rational coefficients; coeffs()[e] multiplies q^e.
/// Trailing zeros are trimmed.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);
    static QPolynomial monomial(int power, Rational coeff);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coefficient(int power) const;
    /// Highest power with a nonzero coefficient, or -1 for zero.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational at_zero() const { return coefficient(0); }

    QPolynomial& operator+=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Element of H*(P^N) (x) Q[q] in the basis H^0..H^N.
class QClass {
public:
    QClass() = default;
    QClass(int ambient_dim, std::vector<QPolynomial> coeffs);
    static QClass zero(int ambient_dim);
    /// q^power * H^k.
    static QClass basis(int ambient_dim, int k, int power = 0);
    static QClass from_classical(const CohClass& c);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<QPolynomial>& coeffs() const { return coeffs_; }
    const QPolynomial& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    /// Specialization q = 0.
    CohClass at_q_zero() const;

    QClass& operator+=(const QClass& o);
    friend QClass operator+(QClass a, const QClass& b) { return a += b; }
    friend bool operator==(const QClass&, const QClass&) = default;

    std::string to_string() const;

private:
    int ambient_dim_ = 0;
    std::vector<QPolynomial> coeffs_;
};

/// H^i * H^j = H^(i+j) for i + j <= N, q H^(i+j-N-1) otherwise, extended q-bilinearly.
QClass small_qproduct(int n, const QClass& a, const QClass& b);

/// gamma_i * gamma_j on P^2 with series-valued coefficients.
/// dual_coeffs[k] = Phi_ijk multiplies the dual class gamma^k.
struct BigQClass {
    std::vector<Series> dual_coeffs;

    /// Coefficient of gamma_m = H^m; for P^2 this is dual_coeffs[2 - m].
    const Series& basis_coefficient(int m) const;

    /// Sets y2 = 0 and reads t as q (the origin y = 0 of the big phase space).
    QClass at_origin() const;
    /// Sets every series variable to zero.
    CohClass classical_limit() const;

    friend bool operator==(const BigQClass&, const BigQClass&) = default;
};

BigQClass big_qproduct_p2(int i, int j, const P2Potential& p);

}  // namespace gwcount
