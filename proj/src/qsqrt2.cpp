#include "iboson/qsqrt2.hpp"

namespace iboson {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool QSqrt2::is_integer() const {
    return is_rational() && a_.get_den() == 1;
}

QSqrt2 QSqrt2::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in Q(sqrt2)");
    // a^2 - 2b^2 != 0 for nonzero rational a, b since sqrt(2) is irrational.
    Rational n = norm();
    return {a_ / n, -b_ / n};
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    if (o.is_rational()) {
        a_ *= o.a_;
        b_ *= o.a_;
        return *this;
    }
    Rational na = a_ * o.a_ + 2 * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

std::string QSqrt2::str() const {
    if (is_rational()) return a_.get_str();
    std::string bs;
    if (b_ == 1) bs = "sqrt2";
    else if (b_ == -1) bs = "-sqrt2";
    else bs = b_.get_str() + "*sqrt2";
    if (sgn(a_) == 0) return bs;
    if (sgn(b_) > 0) return "(" + a_.get_str() + "+" + bs + ")";
    return "(" + a_.get_str() + bs + ")";
}

QSqrt2 qsqrt2_arith(ArithOp op, const QSqrt2& lhs, const QSqrt2& rhs) {
    switch (op) {
        case ArithOp::Add: return lhs + rhs;
        case ArithOp::Mul: return lhs * rhs;
        case ArithOp::Neg: return -lhs;
        case ArithOp::Invert: return lhs.inverse();
    }
    throw UsageError("unknown arithmetic op");
}

QSqrt2 pow2(int e) {
    mpz_class p(1);
    if (e >= 0) {
        p <<= e;
        return QSqrt2(Rational(p));
    }
    p <<= -e;
    return QSqrt2(Rational(mpz_class(1), p));
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.str(); }

}  // namespace iboson
