#include "gwcount/exact.hpp"

#include <cctype>
#include <utility>

namespace gwcount {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::string digits(text);
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (start == digits.size())
        throw DomainError("invalid_rational", "malformed rational: \"" + std::string(whole) + "\"");
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw DomainError("invalid_rational", "malformed rational: \"" + std::string(whole) + "\"");
    }
    if (digits[0] == '+') digits.erase(0, 1);
    return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero_denominator", "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw DomainError("invalid_rational", "sign not allowed in denominator: \"" + std::string(text) + "\"");
    return Rational(num, parse_integer(den_text, text));
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("division_by_zero", "inverse of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division_by_zero", "rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(std::uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt sigma1(std::uint64_t d) {
    if (d == 0) throw DomainError("invalid_degree", "sigma1 requires d >= 1");
    BigInt sum = 0;
    for (std::uint64_t k = 1; k * k <= d; ++k) {
        if (d % k != 0) continue;
        sum += k;
        if (k != d / k) sum += d / k;
    }
    return sum;
}

std::vector<Sublattice> enumerate_sublattices(std::uint64_t d) {
    if (d == 0) throw DomainError("invalid_degree", "sublattice index must be >= 1");
    std::vector<Sublattice> out;
    for (std::uint64_t a = 1; a <= d; ++a) {
        if (d % a != 0) continue;
        std::uint64_t c = d / a;
        for (std::uint64_t b = 0; b < c; ++b) out.push_back({a, b, c});
    }
    return out;
}

BigInt count_sublattices(std::uint64_t d) {
    if (d == 0) throw DomainError("invalid_degree", "sublattice index must be >= 1");
    BigInt count = 0;
    for (std::uint64_t a = 1; a <= d; ++a) {
        if (d % a != 0) continue;
        std::uint64_t c = d / a;
        for (std::uint64_t b = 0; b < c; ++b) ++count;
    }
    return count;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DomainError("dimension_mismatch", "matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DomainError("dimension_mismatch", "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix work = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw DomainError("singular_matrix", "matrix is not invertible");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        Rational scale = work(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work(r, col).is_zero()) continue;
            Rational f = work(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) -= f * work(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace gwcount
