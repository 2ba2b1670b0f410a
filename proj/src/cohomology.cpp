#include "gwcount/cohomology.hpp"

#include <sstream>

namespace gwcount {

namespace {

void require_same_space(const CohClass& a, const CohClass& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DomainError("dimension_mismatch",
                          "classes live in P^" + std::to_string(a.ambient_dim()) + " and P^" +
                              std::to_string(b.ambient_dim()));
}

void require_valid_dim(int n) {
    if (n < 1) throw DomainError("invalid_dimension", "projective space dimension must be >= 1");
}

}  // namespace

CohClass::CohClass(int ambient_dim, std::vector<Rational> coeffs)
    : ambient_dim_(ambient_dim), coeffs_(std::move(coeffs)) {
    require_valid_dim(ambient_dim);
    if (coeffs_.size() != static_cast<std::size_t>(ambient_dim) + 1)
        throw DomainError("dimension_mismatch", "class in P^" + std::to_string(ambient_dim) +
                                                    " needs " + std::to_string(ambient_dim + 1) +
                                                    " coefficients");
}

CohClass CohClass::zero(int ambient_dim) {
    require_valid_dim(ambient_dim);
    return CohClass(ambient_dim, std::vector<Rational>(static_cast<std::size_t>(ambient_dim) + 1));
}

CohClass CohClass::basis(int ambient_dim, int k) {
    CohClass c = zero(ambient_dim);
    if (k < 0 || k > ambient_dim)
        throw DomainError("invalid_basis_index", "basis index " + std::to_string(k) + " outside 0.." +
                                                     std::to_string(ambient_dim));
    c.coeffs_[static_cast<std::size_t>(k)] = 1;
    return c;
}

bool CohClass::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

CohClass& CohClass::operator+=(const CohClass& o) {
    require_same_space(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

CohClass& CohClass::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

std::string CohClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[k] << "*H^" << k;
    }
    if (first) os << "0";
    return os.str();
}

CohomologyRing::CohomologyRing(std::vector<std::vector<Vector>> products, Vector integral)
    : products_(std::move(products)), integral_(std::move(integral)) {
    const std::size_t n = integral_.size();
    if (products_.size() != n) throw DomainError("dimension_mismatch", "product table has wrong size");
    for (const auto& row : products_) {
        if (row.size() != n) throw DomainError("dimension_mismatch", "product table has wrong size");
        for (const auto& v : row)
            if (v.size() != n) throw DomainError("dimension_mismatch", "product entry has wrong size");
    }
}

CohomologyRing CohomologyRing::projective_space(int n) {
    require_valid_dim(n);
    const std::size_t rank = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<Vector>> products(rank, std::vector<Vector>(rank, Vector(rank)));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            if (i + j < rank) products[i][j][i + j] = 1;
    Vector integral(rank);
    integral[rank - 1] = 1;
    return CohomologyRing(std::move(products), std::move(integral));
}

CohomologyRing::Vector CohomologyRing::unit(std::size_t k) const {
    Vector v(rank());
    v[k] = 1;
    return v;
}

CohomologyRing::Vector CohomologyRing::cup(const Vector& a, const Vector& b) const {
    if (a.size() != rank() || b.size() != rank())
        throw DomainError("dimension_mismatch", "class does not match ring rank");
    Vector out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (b[j].is_zero()) continue;
            Rational s = a[i] * b[j];
            const Vector& p = products_[i][j];
            for (std::size_t k = 0; k < rank(); ++k)
                if (!p[k].is_zero()) out[k] += s * p[k];
        }
    }
    return out;
}

Rational CohomologyRing::integrate(const Vector& a) const {
    if (a.size() != rank()) throw DomainError("dimension_mismatch", "class does not match ring rank");
    Rational total;
    for (std::size_t k = 0; k < rank(); ++k) total += a[k] * integral_[k];
    return total;
}

PairingMatrix CohomologyRing::pairing() const {
    Matrix g(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) g(i, j) = integrate(products_[i][j]);
    Matrix g_inv = inverse(g);
    return {std::move(g), std::move(g_inv)};
}

std::vector<CohomologyRing::Vector> CohomologyRing::dual_basis() const {
    const Matrix g_inv = pairing().g_inv;
    std::vector<Vector> out(rank(), Vector(rank()));
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t k = 0; k < rank(); ++k) out[i][k] = g_inv(i, k);
    return out;
}

Rational CohomologyRing::triple(const Vector& a, const Vector& b, const Vector& c) const {
    return integrate(cup(cup(a, b), c));
}

CohomologyRing::Vector CohomologyRing::product_via_triple(const Vector& a, const Vector& b) const {
    const auto duals = dual_basis();
    Vector out(rank());
    for (std::size_t k = 0; k < rank(); ++k) {
        Rational f = triple(a, b, unit(k));
        if (f.is_zero()) continue;
        for (std::size_t m = 0; m < rank(); ++m) out[m] += f * duals[k][m];
    }
    return out;
}

CohClass cup(const CohClass& a, const CohClass& b) {
    require_same_space(a, b);
    const int n = a.ambient_dim();
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return CohClass(n, std::move(out));
}

Rational integrate(const CohClass& a) { return a[a.ambient_dim()]; }

PairingMatrix pairing_matrix(int n) { return CohomologyRing::projective_space(n).pairing(); }

std::vector<CohClass> dual_basis(int n) {
    std::vector<CohClass> out;
    for (auto& v : CohomologyRing::projective_space(n).dual_basis()) out.emplace_back(n, std::move(v));
    return out;
}

Rational triple_F(const CohClass& a, const CohClass& b, const CohClass& c) {
    require_same_space(a, b);
    require_same_space(a, c);
    return CohomologyRing::projective_space(a.ambient_dim()).triple(a.coeffs(), b.coeffs(), c.coeffs());
}

CohClass product_via_F(const CohClass& a, const CohClass& b) {
    require_same_space(a, b);
    auto ring = CohomologyRing::projective_space(a.ambient_dim());
    return CohClass(a.ambient_dim(), ring.product_via_triple(a.coeffs(), b.coeffs()));
}

}  // namespace gwcount
