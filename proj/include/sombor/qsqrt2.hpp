#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace sombor {

// Element of the field Q(sqrt2), stored as a + b*sqrt(2) with exact rationals.
// mpq_class keeps itself in lowest terms with positive denominator, so
// structural equality on (a, b) is numeric equality (sqrt2 is irrational).
class QSqrt2 {
public:
    QSqrt2() : a_(0), b_(0) {}
    QSqrt2(long v) : a_(v), b_(0) {}
    QSqrt2(const mpq_class& a, const mpq_class& b = 0) : a_(a), b_(b) {}

    static QSqrt2 sqrt2(const mpq_class& b = 1) { return QSqrt2(0, b); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

    QSqrt2 operator+(const QSqrt2& o) const { return QSqrt2(a_ + o.a_, b_ + o.b_); }
    QSqrt2 operator-(const QSqrt2& o) const { return QSqrt2(a_ - o.a_, b_ - o.b_); }

    QSqrt2 operator*(const QSqrt2& o) const {
        // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
        return QSqrt2(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }

    QSqrt2 inverse() const {
        if (is_zero())
            throw std::domain_error("QSqrt2: inverse of zero");
        // conjugate trick: 1/(a+br) = (a-br)/(a^2 - 2 b^2); the norm cannot
        // vanish for a nonzero element because sqrt2 is irrational
        mpq_class norm = a_ * a_ - 2 * b_ * b_;
        return QSqrt2(a_ / norm, -b_ / norm);
    }

    QSqrt2 operator/(const QSqrt2& o) const { return *this * o.inverse(); }

    QSqrt2& operator+=(const QSqrt2& o) { return *this = *this + o; }
    QSqrt2& operator-=(const QSqrt2& o) { return *this = *this - o; }
    QSqrt2& operator*=(const QSqrt2& o) { return *this = *this * o; }

    bool operator==(const QSqrt2& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QSqrt2& o) const { return !(*this == o); }

    // Round to double going through mpf at the requested precision, so the
    // sqrt2 multiple does not lose digits before the final rounding.
    double to_double(unsigned prec_bits = 128) const {
        mpf_class a(a_, prec_bits), b(b_, prec_bits);
        mpf_class r2(2, prec_bits);
        r2 = sqrt(r2);
        mpf_class v = a + b * r2;
        return v.get_d();
    }

    // "a + b*sqrt(2)" with exact rationals; pure parts collapse, so e.g.
    // "23004", "-432*sqrt(2)", "1/2 - 3*sqrt(2)", "0".
    std::string str() const {
        if (b_ == 0)
            return a_.get_str();
        std::string rad;
        if (b_ == 1)
            rad = "sqrt(2)";
        else if (b_ == -1)
            rad = "-sqrt(2)";
        else
            rad = b_.get_str() + "*sqrt(2)";
        if (a_ == 0)
            return rad;
        if (b_ > 0)
            return a_.get_str() + " + " + (b_ == 1 ? std::string("sqrt(2)") : b_.get_str() + "*sqrt(2)");
        mpq_class nb = -b_;
        return a_.get_str() + " - " + (nb == 1 ? std::string("sqrt(2)") : nb.get_str() + "*sqrt(2)");
    }

private:
    mpq_class a_, b_;
};

inline QSqrt2 operator*(long k, const QSqrt2& x) { return QSqrt2(k) * x; }

} // namespace sombor
