#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "svir/errors.hpp"
#include "svir/rational.hpp"

namespace svir {

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt(2)).
///
/// The field is closed under inversion: (a + b*sqrt(2))^-1
/// = (a - b*sqrt(2)) / (a^2 - 2*b^2), and the norm a^2 - 2*b^2 vanishes
/// only at zero because sqrt(2) is irrational.
class QuadRat {
public:
    QuadRat() = default;
    QuadRat(long n) : a_(n) {}  // NOLINT: implicit by design, mirrors int literals
    QuadRat(const Rational& a) : a_(a) {}
    QuadRat(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    /// The element sqrt(2).
    static QuadRat sqrt2() { return QuadRat(Rational(0), Rational(1)); }

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& sqrt2_part() const noexcept { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }

    friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a_ - y.a_, x.b_ - y.b_);
    }
    QuadRat operator-() const { return QuadRat(-a_, -b_); }

    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }

    QuadRat& operator+=(const QuadRat& y) { return *this = *this + y; }
    QuadRat& operator-=(const QuadRat& y) { return *this = *this - y; }
    QuadRat& operator*=(const QuadRat& y) { return *this = *this * y; }

    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

    QuadRat inverse() const {
        if (is_zero()) throw std::domain_error("QuadRat: inverse of zero");
        Rational n = a_ * a_ - 2 * b_ * b_;
        return QuadRat(a_ / n, -b_ / n);
    }

    friend QuadRat operator/(const QuadRat& x, const QuadRat& y) {
        return x * y.inverse();
    }

    QuadRat pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        QuadRat result(1);
        QuadRat base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            base *= base;
            k >>= 1;
        }
        return result;
    }

    /// True when the canonical display form starts with a minus sign.
    /// Mixed elements (both parts nonzero) display as a parenthesized sum.
    bool is_display_negative() const {
        if (b_ == 0) return a_ < 0;
        if (a_ == 0) return b_ < 0;
        return false;
    }

    /// Canonical text form: "3/2", "w", "-w", "3/2*w", "1 + w", "1 - 2*w".
    std::string to_string() const {
        if (is_zero()) return "0";
        if (b_ == 0) return svir::to_string(a_);
        std::string wpart;
        Rational babs = b_ < 0 ? Rational(-b_) : b_;
        wpart = (babs == 1) ? "w" : svir::to_string(babs) + "*w";
        if (a_ == 0) return (b_ < 0 ? "-" : "") + wpart;
        return svir::to_string(a_) + (b_ < 0 ? " - " : " + ") + wpart;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadRat& x) {
        return os << x.to_string();
    }

private:
    Rational a_;  // rational part
    Rational b_;  // coefficient of sqrt(2)
};

}  // namespace svir
