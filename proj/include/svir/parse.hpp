#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "svir/errors.hpp"
#include "svir/generators.hpp"
#include "svir/modules.hpp"
#include "svir/morphisms.hpp"
#include "svir/poly.hpp"
#include "svir/scalar.hpp"

namespace svir {

using ParsedExpression = std::variant<Scalar, AlgebraElement, AnyVector<Scalar>>;

namespace detail {

/// Recursive-descent parser for the expression grammar shared by the CLI
/// and the printers:
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := atom ['^' exponent]
///   atom    := rational | 'q' | 'a' | 'w' | variable | '(' expr ')'
///   vector  := '[' 'even' ':' expr '|' 'odd' ':' expr ']'
///   gen     := ('L'|'G') '(' ['-'] int ['/' '2'] ')'
///   element := ['+'|'-'] eterm (('+'|'-') eterm)*
///
/// Polynomial values are carried as Poly<Scalar> in an optional variable;
/// pure scalars are degree-0 polynomials.
class ExprParser {
public:
    ExprParser(std::string text, std::optional<VarTag> expected_var)
        : text_(std::move(text)), expected_var_(expected_var) {}

    Scalar parse_scalar() {
        Poly<Scalar> p = parse_expr(/*allow_vars=*/false);
        expect_end();
        return p.coeff(0);
    }

    Poly<Scalar> parse_poly() {
        Poly<Scalar> p = parse_expr(/*allow_vars=*/true);
        expect_end();
        return finalize_poly(p);
    }

    AnyVector<Scalar> parse_vector(Family family) {
        expect_symbol('[');
        expect_word("even");
        expect_symbol(':');
        expected_var_ = family == Family::Ramond ? VarTag::T : VarTag::X;
        seen_var_.reset();
        Poly<Scalar> even = finalize_poly(parse_expr(true));
        expect_symbol('|');
        expect_word("odd");
        expect_symbol(':');
        expected_var_ = family == Family::Ramond ? VarTag::T : VarTag::Y;
        seen_var_.reset();
        Poly<Scalar> odd = finalize_poly(parse_expr(true));
        expect_symbol(']');
        expect_end();
        if (family == Family::Ramond)
            return RamondVector<Scalar>(even.retag(VarTag::T), odd.retag(VarTag::T));
        return NSVector<Scalar>(even.retag(VarTag::X), odd.retag(VarTag::Y));
    }

    Generator parse_generator(Family family) {
        Generator g = parse_generator_atom(family);
        expect_end();
        return g;
    }

    AlgebraElement parse_element(Family family) {
        AlgebraElement acc(family);
        bool negative = consume_sign();
        acc += parse_element_term(family, negative);
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                bool neg = get() == '-';
                acc += parse_element_term(family, neg);
            } else {
                break;
            }
        }
        expect_end();
        return acc;
    }

private:
    // ---- lexing -----------------------------------------------------------

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char get() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        return text_[pos_++];
    }

    bool at_word(const char* w) {
        skip_ws();
        std::size_t n = std::char_traits<char>::length(w);
        return text_.compare(pos_, n, w) == 0;
    }

    void expect_symbol(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void expect_word(const char* w) {
        if (!at_word(w)) throw ParseError(std::string("expected '") + w + "'", pos_);
        pos_ += std::char_traits<char>::length(w);
    }

    void expect_end() {
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError("unexpected trailing input '" + text_.substr(pos_) + "'", pos_);
    }

    BigInt parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected a number", pos_);
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return BigInt(digits);
    }

    Rational parse_rational() {
        BigInt num = parse_uint();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            std::size_t save = pos_++;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                BigInt den = parse_uint();
                if (den == 0) throw ParseError("zero denominator", save);
                return Rational(num, den);
            }
            pos_ = save;  // the '/' belongs to something else
        }
        return Rational(num);
    }

    long parse_int_exponent() {
        bool paren = false;
        skip_ws();
        if (peek() == '(') {
            get();
            paren = true;
        }
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        }
        BigInt v = parse_uint();
        if (paren) expect_symbol(')');
        long out = v.convert_to<long>();
        return neg ? -out : out;
    }

    bool consume_sign() {
        skip_ws();
        if (peek() == '+' || peek() == '-') return get() == '-';
        return false;
    }

    // ---- scalar / polynomial expressions ----------------------------------

    Poly<Scalar> make_const(Scalar c) {
        return Poly<Scalar>::constant(current_var(), std::move(c));
    }

    VarTag current_var() const { return expected_var_.value_or(seen_var_.value_or(VarTag::T)); }

    Poly<Scalar> parse_expr(bool allow_vars) {
        bool neg = consume_sign();
        Poly<Scalar> acc = parse_term(allow_vars);
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                Poly<Scalar> t = parse_term(allow_vars);
                acc = align(acc);
                acc = c == '+' ? acc + align(t) : acc - align(t);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<Scalar> parse_term(bool allow_vars) {
        Poly<Scalar> acc = parse_factor(allow_vars);
        while (true) {
            skip_ws();
            if (peek() == '*') {
                get();
                acc = align(acc) * align(parse_factor(allow_vars));
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<Scalar> parse_factor(bool allow_vars) {
        Poly<Scalar> base = parse_atom(allow_vars);
        skip_ws();
        if (peek() != '^') return base;
        std::size_t caret = pos_;
        get();
        long e = parse_int_exponent();
        // Negative exponents only make sense for the units q and w and for
        // nonzero rationals; atoms remember whether they were such a unit.
        if (e >= 0) {
            Poly<Scalar> r = make_const(Scalar(1));
            for (long i = 0; i < e; ++i) r = align(r) * align(base);
            return r;
        }
        if (!last_atom_unit_) throw ParseError("negative exponent on a non-invertible atom", caret);
        Scalar s = base.coeff(0);
        return make_const(s.inverse().pow(static_cast<unsigned long>(-e)));
    }

    Poly<Scalar> parse_atom(bool allow_vars) {
        last_atom_unit_ = false;
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == '(') {
            get();
            Poly<Scalar> inner = parse_expr(allow_vars);
            expect_symbol(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational r = parse_rational();
            last_atom_unit_ = r != 0;
            return make_const(Scalar(r));
        }
        if (c == 'q') {
            get();
            last_atom_unit_ = true;
            return make_const(Scalar::q_power(1));
        }
        if (c == 'a') {
            get();
            return make_const(Scalar::alpha());
        }
        if (c == 'w') {
            get();
            last_atom_unit_ = true;
            return make_const(Scalar::sqrt2());
        }
        if (allow_vars && (c == 't' || c == 'x' || c == 'y')) {
            get();
            VarTag tag = c == 't' ? VarTag::T : c == 'x' ? VarTag::X : VarTag::Y;
            if (expected_var_ && tag != *expected_var_)
                throw ParseError(std::string("unexpected variable '") + c + "'", at);
            if (seen_var_ && *seen_var_ != tag)
                throw ParseError("mixed variables in one polynomial", at);
            seen_var_ = tag;
            return Poly<Scalar>::monomial(tag, Scalar(1), 1);
        }
        throw ParseError("expected a number, 'q', 'a', 'w', a variable or '('", at);
    }

    /// Constants are parsed with a placeholder tag before any variable is
    /// seen; align retags them so polynomial arithmetic sees one variable.
    Poly<Scalar> align(const Poly<Scalar>& p) const {
        VarTag tag = current_var();
        return p.var() == tag ? p : p.retag(tag);
    }

    Poly<Scalar> finalize_poly(const Poly<Scalar>& p) { return align(p); }

    // ---- generators and algebra elements ----------------------------------

    Generator parse_generator_atom(Family family) {
        skip_ws();
        std::size_t at = pos_;
        char c = get();
        if (c != 'L' && c != 'G') throw ParseError("expected 'L' or 'G'", at);
        expect_symbol('(');
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        }
        BigInt num = parse_uint();
        long twice = 2 * num.convert_to<long>();
        skip_ws();
        if (peek() == '/') {
            get();
            std::size_t dpos = pos_;
            BigInt den = parse_uint();
            if (den != 2) throw ParseError("index denominator must be 2", dpos);
            twice /= 2;
        }
        expect_symbol(')');
        if (neg) twice = -twice;
        return Generator(c == 'L' ? GenKind::L : GenKind::G, HalfInt::from_twice(twice), family);
    }

    AlgebraElement parse_element_term(Family family, bool negative) {
        Scalar coeff(1);
        std::optional<Generator> gen;
        while (true) {
            skip_ws();
            char c = peek();
            if ((c == 'L' || c == 'G') && !gen) {
                gen = parse_generator_atom(family);
            } else {
                Poly<Scalar> f = parse_factor(/*allow_vars=*/false);
                coeff *= f.coeff(0);
            }
            skip_ws();
            if (peek() == '*') {
                get();
                continue;
            }
            break;
        }
        if (!gen) {
            if (coeff.is_zero()) return AlgebraElement(family);  // a bare zero term
            throw ParseError("expected a generator L(...) or G(...)", pos_);
        }
        if (negative) coeff = -coeff;
        return AlgebraElement::from(*gen, coeff);
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::optional<VarTag> expected_var_;
    std::optional<VarTag> seen_var_;
    bool last_atom_unit_ = false;
};

}  // namespace detail

inline Scalar parse_scalar(const std::string& text) {
    return detail::ExprParser(text, std::nullopt).parse_scalar();
}

/// Parse a polynomial; the variable is inferred unless `expected` is given,
/// and constants default to the expected tag (or t).
inline Poly<Scalar> parse_poly(const std::string& text,
                               std::optional<VarTag> expected = std::nullopt) {
    return detail::ExprParser(text, expected).parse_poly();
}

inline AnyVector<Scalar> parse_vector(const std::string& text, Family family) {
    return detail::ExprParser(text, std::nullopt).parse_vector(family);
}

inline Generator parse_generator(const std::string& text, Family family) {
    return detail::ExprParser(text, std::nullopt).parse_generator(family);
}

inline AlgebraElement parse_element(const std::string& text, Family family) {
    return detail::ExprParser(text, std::nullopt).parse_element(family);
}

/// Dispatch on shape: vectors start with '[', algebra elements contain a
/// generator, anything else is a scalar. Elements and vectors need a family;
/// for vectors it can be inferred from the variables that appear.
inline ParsedExpression parse_expression(const std::string& text,
                                         std::optional<Family> family = std::nullopt) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        Family fam;
        if (family) {
            fam = *family;
        } else if (text.find('t') != std::string::npos) {
            fam = Family::Ramond;
        } else if (text.find('x') != std::string::npos || text.find('y') != std::string::npos) {
            fam = Family::NeveuSchwarz;
        } else {
            throw ParseError("cannot infer the family of a constant vector; pass one", 0);
        }
        return parse_vector(text, fam);
    }
    if (text.find("L(") != std::string::npos || text.find("G(") != std::string::npos) {
        if (!family) throw ParseError("algebra elements need a family", 0);
        return parse_element(text, *family);
    }
    return parse_scalar(text);
}

}  // namespace svir
