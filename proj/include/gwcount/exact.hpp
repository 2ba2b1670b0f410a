// Exact arithmetic and the small combinatorial toolkit shared by every module.
//
// Integers are GMP mpz values. Rational wraps mpq and keeps it canonical:
// lowest terms, positive denominator, zero stored as 0/1.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gwcount {

using BigInt = mpz_class;

/// Failure of a mathematical precondition (d = 0, degenerate points, ...).
/// `kind` is a stable machine-readable tag; what() carries the detail.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(unsigned long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p", "p/q", with optional leading sign on p.
    static Rational parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    Rational inverse() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::uint64_t n, std::int64_t k);

BigInt factorial(std::uint64_t n);

/// Sum of the positive divisors of d. Throws DomainError for d = 0.
BigInt sigma1(std::uint64_t d);

/// Hermite normal form of a finite-index subgroup of Z^2, generated by
/// (a, b) and (0, c) with 0 <= b < c.
struct Sublattice {
    std::uint64_t a = 1;
    std::uint64_t b = 0;
    std::uint64_t c = 1;

    std::uint64_t index() const { return a * c; }
    friend bool operator==(const Sublattice&, const Sublattice&) = default;
    friend auto operator<=>(const Sublattice&, const Sublattice&) = default;
};

/// All index-d sublattices in Hermite normal form, ordered by (a, b, c).
std::vector<Sublattice> enumerate_sublattices(std::uint64_t d);

/// Counts index-d sublattices by walking the HNF triples, without using sigma1.
BigInt count_sublattices(std::uint64_t d);

/// Dense row-major matrix of Rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Gauss-Jordan inverse. Throws DomainError("singular_matrix") if not invertible.
Matrix inverse(const Matrix& m);

}  // namespace gwcount
