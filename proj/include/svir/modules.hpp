#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "svir/algebra.hpp"
#include "svir/errors.hpp"
#include "svir/generators.hpp"
#include "svir/poly.hpp"
#include "svir/report.hpp"

namespace svir {

inline QuadRat pow_int(const QuadRat& x, long k) { return x.pow(k); }
inline Scalar pow_int(const Scalar& x, long k) { return x.pow_int(k); }

/// Vector f(x^2) + x*g(x^2) of the Ramond carrier C[x^2] + x*C[x^2], stored
/// as the pair (f, g) of polynomials in t = x^2. The `pi` marker records a
/// parity relabeling: with pi = false the f-component is even and the
/// g-component odd; flipping pi swaps the labels without touching the data.
template <class C>
struct RamondVector {
    Poly<C> even{VarTag::T};
    Poly<C> odd{VarTag::T};
    bool pi = false;

    RamondVector() = default;
    RamondVector(Poly<C> e, Poly<C> o, bool pi_flag = false)
        : even(std::move(e)), odd(std::move(o)), pi(pi_flag) {
        if (even.var() != VarTag::T || odd.var() != VarTag::T)
            throw FamilyMismatch("RamondVector components must be polynomials in t");
    }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }
    int degree() const { return std::max(even.degree(), odd.degree()); }

    friend RamondVector operator+(const RamondVector& v, const RamondVector& w) {
        return RamondVector(v.even + w.even, v.odd + w.odd, v.pi);
    }
    friend RamondVector operator-(const RamondVector& v, const RamondVector& w) {
        return RamondVector(v.even - w.even, v.odd - w.odd, v.pi);
    }
    RamondVector operator-() const { return RamondVector(-even, -odd, pi); }
    friend RamondVector operator*(const C& c, const RamondVector& v) {
        return RamondVector(c * v.even, c * v.odd, v.pi);
    }
    friend bool operator==(const RamondVector& v, const RamondVector& w) {
        return v.pi == w.pi && v.even == w.even && v.odd == w.odd;
    }
    friend bool operator!=(const RamondVector& v, const RamondVector& w) { return !(v == w); }

    std::string to_string() const {
        return "[even: " + even.to_string() + " | odd: " + odd.to_string() + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const RamondVector& v) {
        return os << v.to_string();
    }
};

/// Vector f(x) + g(y) of the Neveu-Schwarz carrier C[x] + C[y]. As above,
/// `pi` swaps the parity labels of the two components.
template <class C>
struct NSVector {
    Poly<C> even{VarTag::X};
    Poly<C> odd{VarTag::Y};
    bool pi = false;

    NSVector() = default;
    NSVector(Poly<C> e, Poly<C> o, bool pi_flag = false)
        : even(std::move(e)), odd(std::move(o)), pi(pi_flag) {
        if (even.var() != VarTag::X || odd.var() != VarTag::Y)
            throw FamilyMismatch("NSVector components must be polynomials in x and y");
    }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }
    int degree() const { return std::max(even.degree(), odd.degree()); }

    friend NSVector operator+(const NSVector& v, const NSVector& w) {
        return NSVector(v.even + w.even, v.odd + w.odd, v.pi);
    }
    friend NSVector operator-(const NSVector& v, const NSVector& w) {
        return NSVector(v.even - w.even, v.odd - w.odd, v.pi);
    }
    NSVector operator-() const { return NSVector(-even, -odd, pi); }
    friend NSVector operator*(const C& c, const NSVector& v) {
        return NSVector(c * v.even, c * v.odd, v.pi);
    }
    friend bool operator==(const NSVector& v, const NSVector& w) {
        return v.pi == w.pi && v.even == w.even && v.odd == w.odd;
    }
    friend bool operator!=(const NSVector& v, const NSVector& w) { return !(v == w); }

    std::string to_string() const {
        return "[even: " + even.to_string() + " | odd: " + odd.to_string() + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const NSVector& v) {
        return os << v.to_string();
    }
};

/// Toggle the parity labeling; the underlying data is untouched.
template <class V>
V parity_flip(V v) {
    v.pi = !v.pi;
    return v;
}

/// Parity of a homogeneous vector under its labeling; nullopt when the
/// vector is zero or mixes both components.
template <class V>
std::optional<Parity> parity_of(const V& v) {
    if (v.is_zero()) return std::nullopt;
    if (v.odd.is_zero()) return v.pi ? Parity::Odd : Parity::Even;
    if (v.even.is_zero()) return v.pi ? Parity::Even : Parity::Odd;
    return std::nullopt;
}

enum class ActionVariant { Plain, Twisted, RestrictedViaSigma };

inline const char* to_cstring(ActionVariant v) {
    switch (v) {
        case ActionVariant::Plain: return "plain";
        case ActionVariant::Twisted: return "twisted";
        default: return "restricted-via-sigma";
    }
}

/// Parameters and action variant of one module. `lambda` must be invertible
/// in C (an integer power of q times a nonzero constant); `sqrt_lambda` is
/// carried along when the module was built from a q-value, and is required
/// by the maps that involve sqrt(lambda) and by twists of the Neveu-Schwarz
/// family.
template <class C>
struct ModuleSpec {
    Family carrier = Family::Ramond;
    C lambda{1};
    std::optional<C> sqrt_lambda;
    C alpha{0};
    ActionVariant variant = ActionVariant::Plain;
    std::optional<C> twist_lambda;
    std::optional<C> twist_sqrt_lambda;

    Family acting_family() const {
        return variant == ActionVariant::RestrictedViaSigma ? Family::NeveuSchwarz : carrier;
    }

    C lambda_pow(long k) const { return pow_int(lambda, k); }

    /// Scale factor of sigma_lambda on one generator, for the Twisted variant.
    C twist_factor(const Generator& g) const {
        if (g.index().is_integer()) return pow_int(*twist_lambda, g.index().as_integer());
        if (!twist_sqrt_lambda)
            throw FamilyMismatch("twisted action on half-odd index needs a sqrt(lambda)");
        return pow_int(*twist_sqrt_lambda, g.index().twice());
    }

    ModuleSpec twisted(C tw_lambda, std::optional<C> tw_sqrt = std::nullopt) const {
        ModuleSpec s = *this;
        s.variant = ActionVariant::Twisted;
        s.twist_lambda = std::move(tw_lambda);
        s.twist_sqrt_lambda = std::move(tw_sqrt);
        return s;
    }

    /// Neveu-Schwarz action on a Ramond carrier through the embedding sigma.
    ModuleSpec restricted_via_sigma() const {
        if (carrier != Family::Ramond)
            throw FamilyMismatch("restricted_via_sigma: carrier must be Ramond");
        ModuleSpec s = *this;
        s.variant = ActionVariant::RestrictedViaSigma;
        return s;
    }

    std::string params_string() const {
        std::string s = std::string(to_cstring(carrier)) + ", lambda=" + lambda.to_string() +
                        ", alpha=" + alpha.to_string();
        if (variant != ActionVariant::Plain) s += std::string(", ") + to_cstring(variant);
        if (variant == ActionVariant::Twisted && twist_lambda)
            s += ", twist-lambda=" + twist_lambda->to_string();
        return s;
    }
};

/// Module with fully symbolic parameters: lambda = q^2, alpha = a.
inline ModuleSpec<Scalar> symbolic_module(Family family) {
    return {family, Scalar::q_power(2), Scalar::q_power(1), Scalar::alpha()};
}

/// Symbolic lambda = q^2 with a fixed alpha (e.g. 0 or 1/2).
inline ModuleSpec<Scalar> symbolic_module_with_alpha(Family family, Scalar alpha) {
    return {family, Scalar::q_power(2), Scalar::q_power(1), std::move(alpha)};
}

/// Module at a concrete point: lambda = q0^2, alpha = alpha0.
inline ModuleSpec<QuadRat> module_at(Family family, const SpecPoint& p) {
    return {family, p.q0() * p.q0(), p.q0(), p.alpha0()};
}

/// Ramond module with lambda given directly (used for the codomain of the
/// map that halves q-exponents, where lambda is an odd power of q).
template <class C>
ModuleSpec<C> ramond_module_with_lambda(C lambda, C alpha) {
    return {Family::Ramond, std::move(lambda), std::nullopt, std::move(alpha)};
}

namespace detail {

template <class C>
RamondVector<C> act_ramond_plain(const Generator& g, const RamondVector<C>& v,
                                 const ModuleSpec<C>& spec) {
    const long m = g.index().as_integer();
    const HalfInt shift_by = HalfInt::from_int(m);
    const C lam = spec.lambda_pow(m);
    const C m_alpha = coeff_from_rational<C>(make_rational(m)) * spec.alpha;
    RamondVector<C> out;
    out.pi = v.pi;
    if (g.kind() == GenKind::L) {
        const C half_m = coeff_from_rational<C>(make_rational(m, 2));
        out.even = lam * v.even.shift(shift_by).mul_linear(C(1), m_alpha);
        out.odd = lam * v.odd.shift(shift_by).mul_linear(C(1), m_alpha + half_m);
    } else {
        const C two_m_alpha = coeff_from_rational<C>(make_rational(2 * m)) * spec.alpha;
        out.even = lam * v.odd.shift(shift_by).mul_linear(C(1), two_m_alpha);
        out.odd = lam * v.even.shift(shift_by);
    }
    return out;
}

template <class C>
NSVector<C> act_ns_plain(const Generator& g, const NSVector<C>& v, const ModuleSpec<C>& spec) {
    NSVector<C> out;
    out.pi = v.pi;
    if (g.kind() == GenKind::L) {
        const long m = g.index().as_integer();
        const C lam = spec.lambda_pow(m);
        const C m_alpha = coeff_from_rational<C>(make_rational(m)) * spec.alpha;
        const C m_alpha_half =
            m_alpha + coeff_from_rational<C>(make_rational(m, 2));
        const HalfInt shift_by = HalfInt::from_int(m);
        out.even = lam * v.even.shift(shift_by).mul_linear(C(1), m_alpha);
        out.odd = lam * v.odd.shift(shift_by).mul_linear(C(1), m_alpha_half);
    } else {
        const HalfInt r = g.index();
        const C lam_minus = spec.lambda_pow((r.twice() - 1) / 2);  // lambda^(r - 1/2)
        const C lam_plus = spec.lambda_pow((r.twice() + 1) / 2);   // lambda^(r + 1/2)
        const C two_r_alpha = coeff_from_rational<C>(make_rational(r.twice())) * spec.alpha;
        out.odd = lam_minus * v.even.retag(VarTag::Y).shift(r);
        out.even = lam_plus * v.odd.retag(VarTag::X).shift(r).mul_linear(C(1), two_r_alpha);
    }
    return out;
}

}  // namespace detail

/// Action of one generator, honoring the spec's variant. The Twisted variant
/// acts through sigma_lambda; RestrictedViaSigma lets Neveu-Schwarz
/// generators act on a Ramond carrier through the embedding sigma.
template <class C>
RamondVector<C> act(const Generator& g, const RamondVector<C>& v, const ModuleSpec<C>& spec) {
    if (spec.carrier != Family::Ramond)
        throw FamilyMismatch("act: Ramond vector given to a Neveu-Schwarz module");
    if (g.family() != spec.acting_family())
        throw FamilyMismatch("act: generator family does not match the module");
    switch (spec.variant) {
        case ActionVariant::Plain:
            return detail::act_ramond_plain(g, v, spec);
        case ActionVariant::Twisted:
            return spec.twist_factor(g) * detail::act_ramond_plain(g, v, spec);
        case ActionVariant::RestrictedViaSigma: {
            RamondVector<C> out;
            out.pi = v.pi;
            const AlgebraElement image = embed_sigma(AlgebraElement::basis(g));
            for (const auto& [rg, c] : image.terms())
                out = out + coeff_from_scalar<C>(c) * detail::act_ramond_plain(rg, v, spec);
            return out;
        }
    }
    throw Error("act: unreachable");
}

template <class C>
NSVector<C> act(const Generator& g, const NSVector<C>& v, const ModuleSpec<C>& spec) {
    if (spec.carrier != Family::NeveuSchwarz)
        throw FamilyMismatch("act: Neveu-Schwarz vector given to a Ramond module");
    if (g.family() != spec.acting_family())
        throw FamilyMismatch("act: generator family does not match the module");
    if (spec.variant == ActionVariant::Twisted)
        return spec.twist_factor(g) * detail::act_ns_plain(g, v, spec);
    return detail::act_ns_plain(g, v, spec);
}

/// Linear extension of the action to algebra elements.
template <class C, class V>
V act(const AlgebraElement& e, const V& v, const ModuleSpec<C>& spec) {
    V out;
    out.pi = v.pi;
    for (const auto& [g, c] : e.terms()) out = out + coeff_from_scalar<C>(c) * act(g, v, spec);
    return out;
}

template <class C>
RamondVector<C> ramond_monomial(Parity p, std::size_t k) {
    RamondVector<C> v;
    if (p == Parity::Even)
        v.even = Poly<C>::monomial(VarTag::T, C(1), k);
    else
        v.odd = Poly<C>::monomial(VarTag::T, C(1), k);
    return v;
}

template <class C>
NSVector<C> ns_monomial(Parity p, std::size_t k) {
    NSVector<C> v;
    if (p == Parity::Even)
        v.even = Poly<C>::monomial(VarTag::X, C(1), k);
    else
        v.odd = Poly<C>::monomial(VarTag::Y, C(1), k);
    return v;
}

inline RamondVector<QuadRat> specialize(const RamondVector<Scalar>& v, const SpecPoint& p) {
    return {specialize(v.even, p), specialize(v.odd, p), v.pi};
}
inline NSVector<QuadRat> specialize(const NSVector<Scalar>& v, const SpecPoint& p) {
    return {specialize(v.even, p), specialize(v.odd, p), v.pi};
}

namespace detail {

template <class C, class V, class MonomialFn>
void sweep_module_axioms(const ModuleSpec<C>& spec, long window, long max_deg,
                         MonomialFn&& monomial, VerificationReport& report) {
    const auto gens = basis_window(spec.acting_family(), window);
    std::vector<V> monomials;
    for (long k = 0; k <= max_deg; ++k) {
        monomials.push_back(monomial(Parity::Even, k));
        monomials.push_back(monomial(Parity::Odd, k));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            const Generator& a = gens[i];
            const Generator& b = gens[j];
            const AlgebraElement br = bracket(AlgebraElement::basis(a), AlgebraElement::basis(b));
            const int sign = parity_sign(a.parity(), b.parity());
            for (const V& v : monomials) {
                V lhs = act(br, v, spec);
                V ab = act(a, act(b, v, spec), spec);
                V ba = act(b, act(a, v, spec), spec);
                V rhs = sign > 0 ? ab - ba : ab + ba;
                ++report.checks;
                if (lhs != rhs) {
                    report.record_failure("a=" + a.to_string() + ", b=" + b.to_string() +
                                              ", v=" + v.to_string(),
                                          lhs.to_string(), rhs.to_string());
                }
            }
        }
    }
}

}  // namespace detail

/// Sweep act([a,b], v) = a(b v) - (-1)^{|a||b|} b(a v) over all generator
/// pairs with |index| <= window and all basis monomials of degree <= max_deg.
template <class C>
VerificationReport check_module_axioms(const ModuleSpec<C>& spec, long window, long max_deg) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check_name = "module-axioms";
    report.parameters = spec.params_string();
    report.window = window;
    report.max_deg = max_deg;
    if (spec.carrier == Family::Ramond)
        detail::sweep_module_axioms<C, RamondVector<C>>(
            spec, window, max_deg, [](Parity p, long k) { return ramond_monomial<C>(p, k); },
            report);
    else
        detail::sweep_module_axioms<C, NSVector<C>>(
            spec, window, max_deg, [](Parity p, long k) { return ns_monomial<C>(p, k); }, report);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace svir
