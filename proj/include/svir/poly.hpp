#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "svir/errors.hpp"
#include "svir/halfint.hpp"
#include "svir/quadrat.hpp"
#include "svir/scalar.hpp"

namespace svir {

/// Variable of a univariate polynomial. T is the Ramond variable x^2;
/// X and Y are the two Neveu-Schwarz variables.
enum class VarTag { T, X, Y };

inline char var_name(VarTag v) {
    switch (v) {
        case VarTag::T: return 't';
        case VarTag::X: return 'x';
        default: return 'y';
    }
}

/// Hard cap on polynomial degree; operations that would exceed it throw
/// DegreeOverflow instead of letting a sweep run away.
inline constexpr int kMaxPolyDegree = 32;

/// Lift of a constant into the coefficient ring C.
template <class C>
C coeff_from_rational(const Rational& r) {
    return C(r);
}

template <class C>
C coeff_from_quadrat(const QuadRat& c);

template <>
inline QuadRat coeff_from_quadrat<QuadRat>(const QuadRat& c) {
    return c;
}
template <>
inline Scalar coeff_from_quadrat<Scalar>(const QuadRat& c) {
    return Scalar(c);
}

/// Lower a symbolic Scalar into C; for C = QuadRat it must be constant.
template <class C>
C coeff_from_scalar(const Scalar& s);

template <>
inline Scalar coeff_from_scalar<Scalar>(const Scalar& s) {
    return s;
}
template <>
inline QuadRat coeff_from_scalar<QuadRat>(const Scalar& s) {
    return s.as_quadrat();
}

/// Dense univariate polynomial over the coefficient ring C in a tagged
/// variable. The highest stored coefficient is nonzero; the zero polynomial
/// stores nothing and reports degree -1 (the "minus infinity" sentinel).
template <class C>
class Poly {
public:
    explicit Poly(VarTag var) : var_(var) {}
    Poly(VarTag var, std::vector<C> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(VarTag var) { return Poly(var); }
    static Poly constant(VarTag var, C c) { return Poly(var, {std::move(c)}); }
    static Poly monomial(VarTag var, C c, std::size_t k) {
        std::vector<C> v(k + 1);
        v[k] = std::move(c);
        return Poly(var, std::move(v));
    }

    VarTag var() const noexcept { return var_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    C coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : C(0);
    }
    const std::vector<C>& coeffs() const noexcept { return coeffs_; }

    friend Poly operator+(const Poly& p, const Poly& q) {
        p.require_same_var(q);
        std::vector<C> v(std::max(p.coeffs_.size(), q.coeffs_.size()), C(0));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.coeff(k) + q.coeff(k);
        return Poly(p.var_, std::move(v));
    }
    friend Poly operator-(const Poly& p, const Poly& q) {
        p.require_same_var(q);
        std::vector<C> v(std::max(p.coeffs_.size(), q.coeffs_.size()), C(0));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.coeff(k) - q.coeff(k);
        return Poly(p.var_, std::move(v));
    }
    Poly operator-() const {
        std::vector<C> v = coeffs_;
        for (auto& c : v) c = -c;
        return Poly(var_, std::move(v));
    }

    /// Scaling by a ring element.
    friend Poly operator*(const C& c, const Poly& p) {
        std::vector<C> v = p.coeffs_;
        for (auto& e : v) e = c * e;
        return Poly(p.var_, std::move(v));
    }

    friend Poly operator*(const Poly& p, const Poly& q) {
        p.require_same_var(q);
        if (p.is_zero() || q.is_zero()) return zero(p.var_);
        std::vector<C> v(p.coeffs_.size() + q.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
                v[i + j] = v[i + j] + p.coeffs_[i] * q.coeffs_[j];
        return Poly(p.var_, std::move(v));
    }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }

    friend bool operator==(const Poly& p, const Poly& q) {
        return p.var_ == q.var_ && p.coeffs_ == q.coeffs_;
    }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    /// p(v + c), expanded. Degree and variable are preserved.
    Poly shift(HalfInt c) const {
        if (c.twice() == 0 || is_zero()) return *this;
        C cc = coeff_from_rational<C>(c.value());
        Poly result = zero(var_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            result = result.mul_linear(C(1), cc) + constant(var_, *it);
        return result;
    }

    /// (a*v + b) * p.
    Poly mul_linear(const C& a, const C& b) const {
        std::vector<C> v(coeffs_.size() + 1, C(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            v[k + 1] = v[k + 1] + a * coeffs_[k];
            v[k] = v[k] + b * coeffs_[k];
        }
        return Poly(var_, std::move(v));
    }

    /// Same coefficients under a new variable tag.
    Poly retag(VarTag to) const {
        Poly r = *this;
        r.var_ = to;
        return r;
    }

    /// p(c * v): coefficient k picks up a factor c^k.
    Poly scale_arg(const C& c) const {
        std::vector<C> v = coeffs_;
        C power(1);
        for (std::size_t k = 1; k < v.size(); ++k) {
            power = power * c;
            v[k] = v[k] * power;
        }
        return Poly(var_, std::move(v));
    }

    /// p / v for polynomials with zero constant term.
    Poly downshift() const {
        if (is_zero()) return *this;
        if (!coeffs_.front().is_zero())
            throw std::domain_error("Poly: downshift needs a zero constant term");
        return Poly(var_, std::vector<C>(coeffs_.begin() + 1, coeffs_.end()));
    }

    /// Descending-degree text form, e.g. "3*t^2 + (1 + a)*t - 1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const C& c = coeffs_[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            std::string body = term_string(c, k);
            bool neg = !body.empty() && body[0] == '-';
            if (out.empty()) {
                out = body;
            } else if (neg) {
                out += " - " + body.substr(1);
            } else {
                out += " + " + body;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        return os << p.to_string();
    }

private:
    void require_same_var(const Poly& q) const {
        if (var_ != q.var_)
            throw std::domain_error("Poly: mixed variables in one operation");
    }

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (static_cast<int>(coeffs_.size()) - 1 > kMaxPolyDegree)
            throw DegreeOverflow("Poly: degree exceeds cap " + std::to_string(kMaxPolyDegree));
    }

    std::string term_string(const C& c, int k) const {
        std::string vs;
        if (k == 1)
            vs = std::string(1, var_name(var_));
        else if (k > 1)
            vs = std::string(1, var_name(var_)) + "^" + std::to_string(k);
        std::string cs = c.to_string();
        if (vs.empty()) return cs;
        if (cs == "1") return vs;
        if (cs == "-1") return "-" + vs;
        if (needs_parens(cs)) cs = "(" + cs + ")";
        return cs + "*" + vs;
    }

    static bool needs_parens(const std::string& s) {
        return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
    }

    VarTag var_;
    std::vector<C> coeffs_;
};

using VarPoly = Poly<Scalar>;

/// Evaluate all coefficients at a point, keeping the polynomial shape.
inline Poly<QuadRat> specialize(const Poly<Scalar>& p, const SpecPoint& pt) {
    std::vector<QuadRat> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.specialize(pt));
    return Poly<QuadRat>(p.var(), std::move(v));
}

}  // namespace svir
