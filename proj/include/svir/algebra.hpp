#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "svir/errors.hpp"
#include "svir/generators.hpp"
#include "svir/report.hpp"

namespace svir {

/// Bracket of two basis generators:
///   [L(m), L(n)] = (m - n) L(m+n)
///   [L(m), G(r)] = (m/2 - r) G(m+r)
///   [G(r), G(s)] = 2 L(r+s)      (symmetric pair: G is odd)
inline AlgebraElement bracket(const Generator& a, const Generator& b) {
    if (a.family() != b.family())
        throw FamilyMismatch("bracket: generators of different families");
    const Family fam = a.family();

    if (a.kind() == GenKind::L && b.kind() == GenKind::L) {
        long m = a.index().as_integer();
        long n = b.index().as_integer();
        return AlgebraElement::from(Generator::L(m + n, fam), Scalar(make_rational(m - n)));
    }
    if (a.kind() == GenKind::L && b.kind() == GenKind::G) {
        Rational coeff = make_rational(a.index().as_integer(), 2) - b.index().value();
        Generator g(GenKind::G, a.index() + b.index(), fam);
        return AlgebraElement::from(g, Scalar(coeff));
    }
    if (a.kind() == GenKind::G && b.kind() == GenKind::L) {
        return -bracket(b, a);
    }
    // G, G
    Generator l(GenKind::L, a.index() + b.index(), fam);
    return AlgebraElement::from(l, Scalar(2));
}

/// Bilinear extension to finite linear combinations.
inline AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.family() != b.family())
        throw FamilyMismatch("bracket: elements of different families");
    AlgebraElement r(a.family());
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms())
            r += (ca * cb) * bracket(ga, gb);
    return r;
}

/// All basis generators with |index| <= window. For Neveu-Schwarz G this
/// means the half-odd indices r with |r| <= window - 1/2.
inline std::vector<Generator> basis_window(Family family, long window) {
    std::vector<Generator> gens;
    for (long m = -window; m <= window; ++m) gens.push_back(Generator::L(m, family));
    if (family == Family::Ramond) {
        for (long m = -window; m <= window; ++m) gens.push_back(Generator::G(m, family));
    } else {
        for (long t = -(2 * window - 1); t <= 2 * window - 1; t += 2)
            gens.push_back(Generator::G(HalfInt::from_twice(t), family));
    }
    return gens;
}

/// The automorphism scaling L(m) by lambda^m and G(r) by lambda^r, with
/// lambda = q^2 so that every factor is an integer power of q.
inline AlgebraElement twist_sigma_lambda(const AlgebraElement& a) {
    AlgebraElement r(a.family());
    for (const auto& [g, c] : a.terms())
        r += AlgebraElement::from(g, c * Scalar::q_power(g.index().twice()));
    return r;
}

/// The embedding of the Neveu-Schwarz algebra into the Ramond algebra:
/// L(m) -> (1/2) L(2m), G(r) -> (1/sqrt(2)) G(2r).
inline AlgebraElement embed_sigma(const AlgebraElement& a) {
    if (a.family() != Family::NeveuSchwarz)
        throw FamilyMismatch("embed_sigma: input must be Neveu-Schwarz");
    AlgebraElement r(Family::Ramond);
    const Scalar half(make_rational(1, 2));
    const Scalar inv_sqrt2(QuadRat(Rational(0), make_rational(1, 2)));  // sqrt(2)/2
    for (const auto& [g, c] : a.terms()) {
        if (g.kind() == GenKind::L) {
            Generator image = Generator::L(2 * g.index().as_integer(), Family::Ramond);
            r += AlgebraElement::from(image, c * half);
        } else {
            Generator image(GenKind::G, g.index().doubled(), Family::Ramond);
            r += AlgebraElement::from(image, c * inv_sqrt2);
        }
    }
    return r;
}

inline int parity_sign(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

/// Exhaustive graded Jacobi sweep over all ordered basis triples with
/// |index| <= window:
///   (-1)^{|a||c|} [a,[b,c]] + (-1)^{|b||a|} [b,[c,a]] + (-1)^{|c||b|} [c,[a,b]] = 0.
inline VerificationReport check_super_jacobi(Family family, long window) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check_name = "super-jacobi";
    report.parameters = std::string("family=") + to_cstring(family);
    report.window = window;

    const auto gens = basis_window(family, window);
    for (const auto& a : gens) {
        for (const auto& b : gens) {
            for (const auto& c : gens) {
                Scalar sa(parity_sign(a.parity(), c.parity()));
                Scalar sb(parity_sign(b.parity(), a.parity()));
                Scalar sc(parity_sign(c.parity(), b.parity()));
                AlgebraElement sum =
                    sa * bracket(AlgebraElement::basis(a), bracket(AlgebraElement::basis(b),
                                                                   AlgebraElement::basis(c))) +
                    sb * bracket(AlgebraElement::basis(b), bracket(AlgebraElement::basis(c),
                                                                   AlgebraElement::basis(a))) +
                    sc * bracket(AlgebraElement::basis(c), bracket(AlgebraElement::basis(a),
                                                                   AlgebraElement::basis(b)));
                ++report.checks;
                if (!sum.is_zero()) {
                    report.record_failure(
                        a.to_string() + ", " + b.to_string() + ", " + c.to_string(),
                        sum.to_string(), "0");
                }
            }
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace svir
