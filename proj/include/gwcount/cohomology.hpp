// Even-degree cohomology rings and the classical pairing machinery.
//
// A ring is described by its basis multiplication table and the integration
// functional. The Poincare pairing, dual basis, triple product F and the
// product recovered from F are written against that description; projective
// space is the one concrete ring provided.
#pragma once

#include "gwcount/exact.hpp"

#include <string>
#include <vector>

namespace gwcount {

/// Element of H*(P^N; Q) in the basis gamma_k = H^k, k = 0..N.
class CohClass {
public:
    CohClass() = default;
    CohClass(int ambient_dim, std::vector<Rational> coeffs);

    static CohClass zero(int ambient_dim);
    /// H^k in P^N.
    static CohClass basis(int ambient_dim, int k);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    bool is_zero() const;

    CohClass& operator+=(const CohClass& o);
    CohClass& operator*=(const Rational& s);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator*(const Rational& s, CohClass a) { return a *= s; }
    friend bool operator==(const CohClass&, const CohClass&) = default;

    std::string to_string() const;

private:
    int ambient_dim_ = 0;
    std::vector<Rational> coeffs_;
};

struct PairingMatrix {
    Matrix g;
    Matrix g_inv;
};

/// Structure constants of a ring with only even-degree classes.
class CohomologyRing {
public:
    using Vector = std::vector<Rational>;

    /// products[i][j] = gamma_i cup gamma_j in basis coordinates;
    /// integral[k] = integral of gamma_k over the fundamental class.
    CohomologyRing(std::vector<std::vector<Vector>> products, Vector integral);

    static CohomologyRing projective_space(int n);

    std::size_t rank() const { return integral_.size(); }

    Vector cup(const Vector& a, const Vector& b) const;
    Rational integrate(const Vector& a) const;

    PairingMatrix pairing() const;
    /// gamma^i = sum_k g^{ik} gamma_k.
    std::vector<Vector> dual_basis() const;
    Rational triple(const Vector& a, const Vector& b, const Vector& c) const;
    /// sum_k F(a, b, gamma_k) gamma^k.
    Vector product_via_triple(const Vector& a, const Vector& b) const;

private:
    Vector unit(std::size_t k) const;

    std::vector<std::vector<Vector>> products_;
    Vector integral_;
};

CohClass cup(const CohClass& a, const CohClass& b);
Rational integrate(const CohClass& a);
PairingMatrix pairing_matrix(int n);
/// (gamma^0, ..., gamma^N); for P^N this is gamma^i = gamma_{N-i}.
std::vector<CohClass> dual_basis(int n);
Rational triple_F(const CohClass& a, const CohClass& b, const CohClass& c);
CohClass product_via_F(const CohClass& a, const CohClass& b);

}  // namespace gwcount
