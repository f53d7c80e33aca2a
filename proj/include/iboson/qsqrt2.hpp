#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace iboson {

// Thrown for mathematically invalid input (non-invertible element, non-strict partition, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown for API misuse (mismatched contexts, missing variables, bad site index, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// mpq_class keeps gcd(num, den) = 1 and den > 0 after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);

// a + b*sqrt(2), a and b rational.
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long a) : a_(a), b_(0) {}
    QSqrt2(Rational a) : a_(std::move(a)), b_(0) { a_.canonicalize(); }
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }
    static QSqrt2 inv_sqrt2() { return {Rational(0), Rational(1, 2)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_integer() const;

    QSqrt2 conj() const { return {a_, -b_}; }
    Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
    QSqrt2 inverse() const;

    QSqrt2& operator+=(const QSqrt2& o);
    QSqrt2& operator-=(const QSqrt2& o);
    QSqrt2& operator*=(const QSqrt2& o);

    friend QSqrt2 operator+(QSqrt2 l, const QSqrt2& r) { return l += r; }
    friend QSqrt2 operator-(QSqrt2 l, const QSqrt2& r) { return l -= r; }
    friend QSqrt2 operator*(QSqrt2 l, const QSqrt2& r) { return l *= r; }
    friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }

    friend bool operator==(const QSqrt2& l, const QSqrt2& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

    std::string str() const;

private:
    Rational a_{0};
    Rational b_{0};
};

enum class ArithOp { Add, Mul, Neg, Invert };

// Single entry point used by the CLI and tests; rhs is ignored for unary ops.
QSqrt2 qsqrt2_arith(ArithOp op, const QSqrt2& lhs, const QSqrt2& rhs = QSqrt2());

// 2^e for any integer e.
QSqrt2 pow2(int e);

std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

}  // namespace iboson
