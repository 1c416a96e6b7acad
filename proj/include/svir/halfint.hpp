#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "svir/rational.hpp"

namespace svir {

/// Element of (1/2)Z stored as its double, so index arithmetic stays integral.
class HalfInt {
public:
    HalfInt() = default;

    static HalfInt from_twice(long twice) { return HalfInt(twice); }
    static HalfInt from_int(long n) { return HalfInt(2 * n); }

    long twice() const noexcept { return twice_; }
    bool is_integer() const noexcept { return twice_ % 2 == 0; }

    long as_integer() const {
        if (!is_integer()) throw std::domain_error("HalfInt: not an integer: " + to_string());
        return twice_ / 2;
    }

    Rational value() const { return make_rational(twice_, 2); }

    HalfInt operator-() const { return HalfInt(-twice_); }
    friend HalfInt operator+(HalfInt x, HalfInt y) { return HalfInt(x.twice_ + y.twice_); }
    friend HalfInt operator-(HalfInt x, HalfInt y) { return HalfInt(x.twice_ - y.twice_); }

    /// 2r as a HalfInt (always integral).
    HalfInt doubled() const { return HalfInt(2 * twice_); }

    friend auto operator<=>(HalfInt, HalfInt) = default;

    /// "3", "-2", "1/2", "-5/2".
    std::string to_string() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

private:
    explicit HalfInt(long twice) : twice_(twice) {}
    long twice_ = 0;
};

}  // namespace svir
