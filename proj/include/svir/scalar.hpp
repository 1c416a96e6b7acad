#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "svir/errors.hpp"
#include "svir/quadrat.hpp"
#include "svir/rational.hpp"

namespace svir {

/// Evaluation point (q0, alpha0) with q0 != 0, so that lambda0 = q0^2 is
/// invertible.
class SpecPoint {
public:
    SpecPoint(QuadRat q0, QuadRat alpha0) : q0_(std::move(q0)), alpha0_(std::move(alpha0)) {
        if (q0_.is_zero()) throw ZeroQ("SpecPoint: q0 must be nonzero");
    }

    const QuadRat& q0() const noexcept { return q0_; }
    const QuadRat& alpha0() const noexcept { return alpha0_; }

    std::string to_string() const {
        return "q0=" + q0_.to_string() + ", a0=" + alpha0_.to_string();
    }

private:
    QuadRat q0_;
    QuadRat alpha0_;
};

/// Element of the commutative ring Q(sqrt(2))[a][q, q^-1]: a finite sum of
/// terms c * q^eq * a^ea with c in Q(sqrt(2)), eq in Z, ea >= 0.
///
/// Terms are kept in a sparse normal form: the map is ordered
/// lexicographically by (eq, ea) and never stores a zero coefficient, so
/// equality of values is equality of term maps.
class Scalar {
public:
    struct Exponents {
        long q = 0;
        long alpha = 0;
        friend auto operator<=>(const Exponents&, const Exponents&) = default;
    };
    using TermMap = std::map<Exponents, QuadRat>;

    Scalar() = default;
    Scalar(long n) {  // NOLINT: implicit by design
        if (n != 0) terms_[{0, 0}] = QuadRat(n);
    }
    Scalar(const Rational& r) {  // NOLINT
        if (r != 0) terms_[{0, 0}] = QuadRat(r);
    }
    Scalar(const QuadRat& c) {  // NOLINT
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }

    /// q^k for any integer k (q is a unit of the ring).
    static Scalar q_power(long k) {
        Scalar s;
        s.terms_[{k, 0}] = QuadRat(1);
        return s;
    }

    /// The indeterminate a (or a^e).
    static Scalar alpha(long e = 1) {
        if (e < 0) throw std::domain_error("Scalar: negative alpha exponent");
        Scalar s;
        s.terms_[{0, e}] = QuadRat(1);
        return s;
    }

    /// sqrt(2) embedded as a constant.
    static Scalar sqrt2() { return Scalar(QuadRat::sqrt2()); }

    static Scalar term(long eq, long ea, QuadRat c) {
        if (ea < 0) throw std::domain_error("Scalar: negative alpha exponent");
        Scalar s;
        if (!c.is_zero()) s.terms_[{eq, ea}] = std::move(c);
        return s;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && begin_is({0, 0}) && terms_.begin()->second.is_one(); }

    /// True when the value lies in Q(sqrt(2)).
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && begin_is({0, 0}));
    }

    /// The constant value; throws unless is_constant().
    QuadRat as_quadrat() const {
        if (terms_.empty()) return QuadRat(0);
        if (!is_constant()) throw std::domain_error("Scalar: not a constant: " + to_string());
        return terms_.begin()->second;
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        Scalar r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, c);
        return r;
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        Scalar r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
        return r;
    }
    Scalar operator-() const {
        Scalar r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        Scalar r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_)
                r.add_term({ex.q + ey.q, ex.alpha + ey.alpha}, cx * cy);
        return r;
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar pow(unsigned long k) const {
        Scalar result(1);
        Scalar base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            base *= base;
            k >>= 1;
        }
        return result;
    }

    /// True for the ring's units c * q^k (no alpha factor, c != 0).
    bool is_unit() const {
        return terms_.size() == 1 && terms_.begin()->first.alpha == 0;
    }

    /// Inverse of a unit c * q^k; throws std::domain_error otherwise.
    Scalar inverse() const {
        if (!is_unit()) throw std::domain_error("Scalar: not invertible: " + to_string());
        const auto& [e, c] = *terms_.begin();
        return term(-e.q, 0, c.inverse());
    }

    /// Integer power, with negative exponents allowed for units.
    Scalar pow_int(long k) const {
        if (k >= 0) return pow(static_cast<unsigned long>(k));
        return inverse().pow(static_cast<unsigned long>(-k));
    }

    /// Ring homomorphism q -> q0, a -> alpha0 into Q(sqrt(2)).
    QuadRat specialize(const SpecPoint& p) const {
        QuadRat acc(0);
        for (const auto& [e, c] : terms_)
            acc += c * p.q0().pow(e.q) * p.alpha0().pow(e.alpha);
        return acc;
    }

    /// Canonical text form, terms in (eq, ea)-lexicographic order, e.g.
    /// "1 + 3/2*w*q^-1 + (1 - w)*q^2*a".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string body = term_string(e, c);
            bool neg = !body.empty() && body[0] == '-';
            if (first) {
                out = body;
                first = false;
            } else if (neg) {
                out += " - " + body.substr(1);
            } else {
                out += " + " + body;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        return os << s.to_string();
    }

private:
    bool begin_is(Exponents e) const { return terms_.begin()->first == e; }

    void add_term(Exponents e, const QuadRat& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    static std::string term_string(Exponents e, const QuadRat& c) {
        std::string vars;
        if (e.q != 0) vars = (e.q == 1) ? "q" : "q^" + std::to_string(e.q);
        if (e.alpha != 0) {
            if (!vars.empty()) vars += "*";
            vars += (e.alpha == 1) ? "a" : "a^" + std::to_string(e.alpha);
        }
        if (vars.empty()) return c.to_string();
        if (c.is_one()) return vars;
        if ((-c).is_one()) return "-" + vars;
        std::string cs = c.to_string();
        bool mixed = c.rational_part() != 0 && c.sqrt2_part() != 0;
        if (mixed) cs = "(" + cs + ")";
        return cs + "*" + vars;
    }

    TermMap terms_;
};

}  // namespace svir
