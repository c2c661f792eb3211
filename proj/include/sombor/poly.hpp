#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsqrt2.hpp"

namespace sombor {

// Dense univariate polynomial, coefficients ascending (coeffs[i] is the
// coefficient of x^i). T is QSqrt2 for exact work or double for float mode.
// The zero polynomial is the empty coefficient vector.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    // x^k with coefficient v
    static Poly monomial(std::size_t k, const T& v) {
        std::vector<T> c(k + 1, T(0));
        c[k] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention here
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const T& operator[](std::size_t i) const {
        static const T zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<T>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly scaled(const T& k) const {
        std::vector<T> r(c_);
        for (auto& v : r) v = v * k;
        return Poly(std::move(r));
    }

    // multiply by x^k
    Poly shifted(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<T> r(c_.size() + k, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

    T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using ExactPoly = Poly<QSqrt2>;
using FloatPoly = Poly<double>;

inline FloatPoly to_float_poly(const ExactPoly& p, unsigned prec_bits = 128) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(q.to_double(prec_bits));
    return FloatPoly(std::move(c));
}

// Render with an explicit variable name, highest power first. unicode_lambda
// picks between the λ glyph and a plain ASCII name.
template <class T>
std::string poly_str(const Poly<T>& p, bool unicode_lambda = true);

inline std::string coeff_repr(const QSqrt2& v) { return v.str(); }
inline std::string coeff_repr(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

template <class T>
std::string poly_str(const Poly<T>& p, bool unicode_lambda) {
    if (p.is_zero()) return "0";
    const std::string var = unicode_lambda ? "\xce\xbb" : "l";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const T& c = p[static_cast<std::size_t>(k)];
        if (c == T(0)) continue;
        std::string cs = coeff_repr(c);
        // mixed exact values ("a + b*sqrt(2)") keep their internal sign and
        // get parenthesized; single-token values move their sign into the
        // joining operator
        bool mixed = cs.find(' ') != std::string::npos;
        bool neg = !mixed && !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string body = mixed ? "(" + cs + ")" : cs;
        if (k == 0) {
            out += body;
        } else {
            if (body != "1") out += body;
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace sombor
