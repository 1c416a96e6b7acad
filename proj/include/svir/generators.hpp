#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "svir/errors.hpp"
#include "svir/halfint.hpp"
#include "svir/scalar.hpp"

namespace svir {

/// The two families: Ramond (G-indices integral) and Neveu-Schwarz
/// (G-indices in 1/2 + Z).
enum class Family { Ramond, NeveuSchwarz };

inline const char* to_cstring(Family f) {
    return f == Family::Ramond ? "ramond" : "ns";
}

enum class GenKind { L, G };
enum class Parity { Even, Odd };

inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

/// Basis generator L(m) or G(r) of one family. L-indices are integers;
/// G-indices are integers in the Ramond family and half-odd-integers in the
/// Neveu-Schwarz family. L is even, G is odd.
class Generator {
public:
    Generator(GenKind kind, HalfInt index, Family family)
        : kind_(kind), index_(index), family_(family) {
        if (kind_ == GenKind::L && !index_.is_integer())
            throw FamilyMismatch("L-index must be an integer: L(" + index_.to_string() + ")");
        if (kind_ == GenKind::G) {
            bool integral = index_.is_integer();
            if (family_ == Family::Ramond && !integral)
                throw FamilyMismatch("Ramond G-index must be an integer: G(" + index_.to_string() + ")");
            if (family_ == Family::NeveuSchwarz && integral)
                throw FamilyMismatch("Neveu-Schwarz G-index must be a half-odd integer: G(" +
                                     index_.to_string() + ")");
        }
    }

    static Generator L(long m, Family family) {
        return Generator(GenKind::L, HalfInt::from_int(m), family);
    }
    static Generator G(HalfInt r, Family family) { return Generator(GenKind::G, r, family); }
    static Generator G(long m, Family family) {
        return Generator(GenKind::G, HalfInt::from_int(m), family);
    }

    GenKind kind() const noexcept { return kind_; }
    HalfInt index() const noexcept { return index_; }
    Family family() const noexcept { return family_; }
    Parity parity() const noexcept { return kind_ == GenKind::L ? Parity::Even : Parity::Odd; }

    friend auto operator<=>(const Generator&, const Generator&) = default;

    std::string to_string() const {
        return std::string(kind_ == GenKind::L ? "L(" : "G(") + index_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Generator& g) {
        return os << g.to_string();
    }

private:
    GenKind kind_;
    HalfInt index_;
    Family family_;
};

/// Finite linear combination of generators of one family, with symbolic
/// coefficients. Zero coefficients are never stored.
class AlgebraElement {
public:
    using TermMap = std::map<Generator, Scalar>;

    explicit AlgebraElement(Family family) : family_(family) {}

    static AlgebraElement basis(const Generator& g) { return from(g, Scalar(1)); }
    static AlgebraElement from(const Generator& g, Scalar coeff) {
        AlgebraElement e(g.family());
        if (!coeff.is_zero()) e.terms_.emplace(g, std::move(coeff));
        return e;
    }

    Family family() const noexcept { return family_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        x.require_same_family(y);
        AlgebraElement r = x;
        for (const auto& [g, c] : y.terms_) r.add_term(g, c);
        return r;
    }
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
        x.require_same_family(y);
        AlgebraElement r = x;
        for (const auto& [g, c] : y.terms_) r.add_term(g, -c);
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r(family_);
        for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
        return r;
    }
    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& x) {
        AlgebraElement r(x.family_);
        for (const auto& [g, xc] : x.terms_) r.add_term(g, c * xc);
        return r;
    }

    AlgebraElement& operator+=(const AlgebraElement& y) { return *this = *this + y; }
    AlgebraElement& operator-=(const AlgebraElement& y) { return *this = *this - y; }

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.family_ == y.family_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

    /// Parity when homogeneous; nullopt for mixed or zero elements.
    std::optional<Parity> parity() const {
        std::optional<Parity> p;
        for (const auto& [g, c] : terms_) {
            if (p && *p != g.parity()) return std::nullopt;
            p = g.parity();
        }
        return p;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [g, c] : terms_) {
            std::string body = term_string(g, c);
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

    friend std::ostream& operator<<(std::ostream& os, const AlgebraElement& e) {
        return os << e.to_string();
    }

private:
    void require_same_family(const AlgebraElement& y) const {
        if (family_ != y.family_)
            throw FamilyMismatch("cannot combine Ramond and Neveu-Schwarz elements");
    }

    void add_term(const Generator& g, const Scalar& c) {
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(g, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    static std::string term_string(const Generator& g, const Scalar& c) {
        std::string cs = c.to_string();
        if (cs == "1") return g.to_string();
        if (cs == "-1") return "-" + g.to_string();
        if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos)
            cs = "(" + cs + ")";
        return cs + "*" + g.to_string();
    }

    Family family_;
    TermMap terms_;
};

}  // namespace svir
