#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "svir/algebra.hpp"
#include "svir/errors.hpp"
#include "svir/linalg.hpp"
#include "svir/modules.hpp"
#include "svir/report.hpp"

namespace svir {

template <class C>
using AnyVector = std::variant<RamondVector<C>, NSVector<C>>;

template <class C>
AnyVector<C> any_monomial(Family carrier, Parity p, std::size_t k) {
    if (carrier == Family::Ramond) return ramond_monomial<C>(p, k);
    return ns_monomial<C>(p, k);
}

template <class C>
AnyVector<C> act(const Generator& g, const AnyVector<C>& v, const ModuleSpec<C>& spec) {
    return std::visit([&](const auto& vec) -> AnyVector<C> { return act(g, vec, spec); }, v);
}

template <class C>
std::string to_string(const AnyVector<C>& v) {
    return std::visit([](const auto& vec) { return vec.to_string(); }, v);
}

template <class C>
int degree_of(const AnyVector<C>& v) {
    return std::visit([](const auto& vec) { return vec.degree(); }, v);
}

template <class C>
std::vector<C> to_coords(const AnyVector<C>& v, long bound) {
    return std::visit([&](const auto& vec) { return to_coords(vec, bound); }, v);
}

template <class C>
AnyVector<C> any_from_coords(Family carrier, const std::vector<C>& coords, long bound) {
    if (carrier == Family::Ramond) return ramond_from_coords<C>(coords, bound);
    return ns_from_coords<C>(coords, bound);
}

template <class C>
bool any_equal(const AnyVector<C>& a, const AnyVector<C>& b) {
    return a == b;
}

/// How a linear map computes its images. The named rules are the explicit
/// maps of the theory; Matrix is a degree-bounded map given by its columns
/// on basis monomials (the output of the intertwiner search).
enum class MapRule { Identity, SmallPhi, Psi, Phi, PhiInverse, Matrix };

inline const char* to_cstring(MapRule r) {
    switch (r) {
        case MapRule::Identity: return "identity";
        case MapRule::SmallPhi: return "phi";
        case MapRule::Psi: return "psi";
        case MapRule::Phi: return "Phi";
        case MapRule::PhiInverse: return "Phi-inverse";
        default: return "matrix";
    }
}

/// Column-per-domain-basis-monomial matrix, degree-bounded. Column
/// comp*(max_deg+1)+k holds the flat codomain coordinates of the image of
/// the degree-k monomial in component comp.
template <class C>
struct MapMatrix {
    long max_deg = 0;
    std::vector<std::vector<C>> cols;
};

template <class C>
struct LinearMap {
    ModuleSpec<C> domain;
    ModuleSpec<C> codomain;
    MapRule rule = MapRule::Identity;
    std::optional<MapMatrix<C>> matrix;
    std::string label;

    std::string describe() const {
        std::string s = label.empty() ? to_cstring(rule) : label;
        return s + ": {" + domain.params_string() + "} -> {" + codomain.params_string() + "}";
    }
};

/// phi: even part t*f |-> odd part f, odd part g |-> even part g. Defined on
/// the submodule whose even part is divisible by t; the codomain carries the
/// flipped parity labels, lambda unchanged, alpha = 1/2.
template <class C>
LinearMap<C> make_small_phi(const ModuleSpec<C>& domain) {
    if (domain.carrier != Family::Ramond || !domain.alpha.is_zero())
        throw FamilyMismatch("make_small_phi: domain must be a Ramond module with alpha = 0");
    ModuleSpec<C> codomain = domain;
    codomain.alpha = coeff_from_rational<C>(make_rational(1, 2));
    return {domain, codomain, MapRule::SmallPhi, std::nullopt, "phi"};
}

/// psi: even part x*f(x) |-> (1/sqrt(2*lambda)) f(y), odd part f(y) |->
/// (sqrt(lambda)/sqrt(2)) f(x). Needs sqrt(lambda) on the domain.
template <class C>
LinearMap<C> make_psi(const ModuleSpec<C>& domain) {
    if (domain.carrier != Family::NeveuSchwarz || !domain.alpha.is_zero())
        throw FamilyMismatch("make_psi: domain must be a Neveu-Schwarz module with alpha = 0");
    if (!domain.sqrt_lambda) throw Error("make_psi: domain needs sqrt(lambda)");
    ModuleSpec<C> codomain = domain;
    codomain.alpha = coeff_from_rational<C>(make_rational(1, 2));
    return {domain, codomain, MapRule::Psi, std::nullopt, "psi"};
}

/// Phi: f(x) |-> f(x^2/2), g(y) |-> (sqrt(lambda)/sqrt(2)) x g(x^2/2), an
/// isomorphism onto the Ramond module with parameter sqrt(lambda) carrying
/// the sigma-restricted Neveu-Schwarz action.
template <class C>
LinearMap<C> make_phi(const ModuleSpec<C>& domain) {
    if (domain.carrier != Family::NeveuSchwarz)
        throw FamilyMismatch("make_phi: domain must be a Neveu-Schwarz module");
    if (!domain.sqrt_lambda) throw Error("make_phi: domain needs sqrt(lambda)");
    ModuleSpec<C> codomain =
        ramond_module_with_lambda<C>(*domain.sqrt_lambda, domain.alpha).restricted_via_sigma();
    return {domain, codomain, MapRule::Phi, std::nullopt, "Phi"};
}

template <class C>
LinearMap<C> make_phi_inverse(const ModuleSpec<C>& ns_side) {
    LinearMap<C> phi = make_phi(ns_side);
    return {phi.codomain, phi.domain, MapRule::PhiInverse, std::nullopt, "Phi-inverse"};
}

template <class C>
LinearMap<C> make_identity(const ModuleSpec<C>& domain, const ModuleSpec<C>& codomain) {
    if (domain.carrier != codomain.carrier)
        throw FamilyMismatch("make_identity: carriers differ");
    return {domain, codomain, MapRule::Identity, std::nullopt, "identity"};
}

template <class C>
LinearMap<C> make_matrix_map(const ModuleSpec<C>& domain, const ModuleSpec<C>& codomain,
                             MapMatrix<C> matrix, std::string label = "matrix") {
    return {domain, codomain, MapRule::Matrix, std::move(matrix), std::move(label)};
}

namespace detail {

template <class C>
C half_sqrt2() {
    return coeff_from_quadrat<C>(QuadRat(Rational(0), make_rational(1, 2)));
}

template <class C>
C inverse_of(const C& c) {
    return c.inverse();
}

}  // namespace detail

template <class C>
AnyVector<C> apply_map(const LinearMap<C>& map, const AnyVector<C>& v) {
    switch (map.rule) {
        case MapRule::Identity:
            return v;

        case MapRule::SmallPhi: {
            const auto& in = std::get<RamondVector<C>>(v);
            if (!in.even.coeff(0).is_zero())
                throw NotInSubmodule("phi: even part has a nonzero constant term");
            return RamondVector<C>(in.odd, in.even.downshift(), !in.pi);
        }

        case MapRule::Psi: {
            const auto& in = std::get<NSVector<C>>(v);
            if (!in.even.coeff(0).is_zero())
                throw NotInSubmodule("psi: even part has a nonzero constant term");
            const C s = *map.domain.sqrt_lambda;
            const C hw = detail::half_sqrt2<C>();
            Poly<C> even = (s * hw) * in.odd.retag(VarTag::X);
            Poly<C> odd = (detail::inverse_of(s) * hw) * in.even.downshift().retag(VarTag::Y);
            return NSVector<C>(std::move(even), std::move(odd), !in.pi);
        }

        case MapRule::Phi: {
            const auto& in = std::get<NSVector<C>>(v);
            const C s = *map.domain.sqrt_lambda;
            const C half = coeff_from_rational<C>(make_rational(1, 2));
            Poly<C> even = in.even.retag(VarTag::T).scale_arg(half);
            Poly<C> odd = (s * detail::half_sqrt2<C>()) * in.odd.retag(VarTag::T).scale_arg(half);
            return RamondVector<C>(std::move(even), std::move(odd), in.pi);
        }

        case MapRule::PhiInverse: {
            const auto& in = std::get<RamondVector<C>>(v);
            const C s = *map.codomain.sqrt_lambda;
            const C two = C(2);
            const C w = coeff_from_quadrat<C>(QuadRat::sqrt2());
            Poly<C> even = in.even.retag(VarTag::X).scale_arg(two);
            Poly<C> odd = (detail::inverse_of(s) * w) * in.odd.retag(VarTag::Y).scale_arg(two);
            return NSVector<C>(std::move(even), std::move(odd), in.pi);
        }

        case MapRule::Matrix: {
            const MapMatrix<C>& mat = *map.matrix;
            const long bound = mat.max_deg;
            std::vector<C> in_coords = to_coords(v, bound);
            std::vector<C> out(2 * (bound + 1), C(0));
            for (std::size_t i = 0; i < in_coords.size(); ++i) {
                if (in_coords[i].is_zero()) continue;
                const auto& col = mat.cols[i];
                for (std::size_t j = 0; j < out.size(); ++j)
                    out[j] = out[j] + in_coords[i] * col[j];
            }
            AnyVector<C> result = any_from_coords(map.codomain.carrier, out, bound);
            return std::visit(
                [&](auto vec) -> AnyVector<C> {
                    vec.pi = std::visit([](const auto& x) { return x.pi; }, v);
                    return vec;
                },
                result);
        }
    }
    throw Error("apply_map: unreachable");
}

/// Domain basis monomials of degree <= max_deg, restricted to the map's
/// declared domain (phi and psi live on the even-part-divisible submodule).
template <class C>
std::vector<AnyVector<C>> domain_basis(const LinearMap<C>& map, long max_deg) {
    const bool submodule = map.rule == MapRule::SmallPhi || map.rule == MapRule::Psi;
    std::vector<AnyVector<C>> out;
    for (long k = submodule ? 1 : 0; k <= max_deg; ++k)
        out.push_back(any_monomial<C>(map.domain.carrier, Parity::Even, k));
    for (long k = 0; k <= max_deg; ++k)
        out.push_back(any_monomial<C>(map.domain.carrier, Parity::Odd, k));
    return out;
}

/// Check map(g . v) = g . map(v) for every generator with |index| <= window
/// and every domain basis monomial of degree <= max_deg, then check the map
/// is injective on that range and that its image spans every codomain
/// monomial of degree <= max_deg - 1.
///
/// For Matrix-rule maps call with max_deg at most the matrix bound minus
/// one, since the action can raise degree by one.
template <class C>
VerificationReport verify_intertwiner(const LinearMap<C>& map, long window, long max_deg) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check_name = "intertwiner";
    report.parameters = map.describe();
    report.window = window;
    report.max_deg = max_deg;

    const Family acting = map.domain.acting_family();
    if (map.codomain.acting_family() != acting)
        throw FamilyMismatch("verify_intertwiner: acting families differ");

    const auto gens = basis_window(acting, window);
    const auto basis = domain_basis(map, max_deg);

    for (const auto& g : gens) {
        for (const auto& v : basis) {
            AnyVector<C> lhs = apply_map(map, act(g, v, map.domain));
            AnyVector<C> rhs = act(g, apply_map(map, v), map.codomain);
            ++report.checks;
            if (!any_equal(lhs, rhs)) {
                report.record_failure("g=" + g.to_string() + ", v=" + to_string(v),
                                      to_string(lhs), to_string(rhs));
            }
        }
    }

    // Degree-wise bijectivity on the swept range.
    RowReducer<C> image(2 * (max_deg + 1));
    for (const auto& v : basis) {
        auto coords = to_coords(apply_map(map, v), max_deg);
        ++report.checks;
        if (!image.insert(coords)) {
            report.record_failure("injectivity, v=" + to_string(v),
                                  to_string(apply_map(map, v)), "independent image");
        }
    }
    for (long k = 0; k + 1 <= max_deg; ++k) {
        for (Parity p : {Parity::Even, Parity::Odd}) {
            auto target = any_monomial<C>(map.codomain.carrier, p, k);
            ++report.checks;
            if (!image.contains(to_coords(target, max_deg))) {
                report.record_failure("surjectivity onto " + to_string(target), "not spanned",
                                      "spanned");
            }
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace detail {

/// Expand symbolic constraint rows into field rows, one per (q, a) exponent
/// pair that appears; for field rows this is the identity.
inline std::vector<std::vector<QuadRat>> expand_rows(std::vector<std::vector<QuadRat>> rows) {
    return rows;
}

inline std::vector<std::vector<QuadRat>> expand_rows(
    const std::vector<std::vector<Scalar>>& rows) {
    std::vector<std::vector<QuadRat>> out;
    for (const auto& row : rows) {
        std::map<Scalar::Exponents, std::vector<QuadRat>> split;
        for (std::size_t j = 0; j < row.size(); ++j) {
            for (const auto& [e, c] : row[j].terms()) {
                auto it = split.find(e);
                if (it == split.end())
                    it = split.emplace(e, std::vector<QuadRat>(row.size(), QuadRat(0))).first;
                it->second[j] = c;
            }
        }
        for (auto& [e, r] : split) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

/// Search for all parity-homogeneous degree-bounded linear maps commuting
/// with every generator of |index| <= window, as a finite homogeneous linear
/// solve. Returns a basis of the solution space (empty when no such map
/// exists at this truncation); parity-preserving solutions come first. With
/// symbolic modules the search is over maps with constant entries.
template <class C>
std::vector<LinearMap<C>> intertwiner_search(const ModuleSpec<C>& A, const ModuleSpec<C>& B,
                                             long window, long max_deg) {
    const Family acting = A.acting_family();
    if (B.acting_family() != acting)
        throw FamilyMismatch("intertwiner_search: acting families differ");

    const long D = max_deg;
    const std::size_t per_comp = static_cast<std::size_t>(D + 1);
    const std::size_t n_basis = 2 * per_comp;
    const std::size_t wide = 2 * static_cast<std::size_t>(D + 2);
    const auto gens = basis_window(acting, window);

    // Images of codomain basis monomials under each generator, one degree of
    // headroom so the top coordinates become genuine vanishing constraints.
    std::vector<std::vector<std::vector<C>>> act_b(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        act_b[gi].reserve(n_basis);
        for (std::size_t i = 0; i < n_basis; ++i) {
            Parity p = i < per_comp ? Parity::Even : Parity::Odd;
            std::size_t k = i % per_comp;
            auto image = act(gens[gi], any_monomial<C>(B.carrier, p, k), B);
            act_b[gi].push_back(to_coords(image, D + 1));
        }
    }

    std::vector<LinearMap<C>> solutions;
    for (int reversing = 0; reversing <= 1; ++reversing) {
        // Unknown u(i, kc): coefficient of the degree-kc codomain monomial in
        // the image of domain basis i; the image component is the domain
        // component, flipped in the reversing sector.
        const std::size_t ncols = n_basis * per_comp;
        auto col_of = [&](std::size_t i, std::size_t kc) { return i * per_comp + kc; };
        auto image_comp = [&](std::size_t i) {
            return (i < per_comp ? 0u : 1u) ^ static_cast<unsigned>(reversing);
        };

        std::vector<std::vector<C>> rows;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            for (std::size_t i = 0; i < n_basis; ++i) {
                Parity p = i < per_comp ? Parity::Even : Parity::Odd;
                std::size_t k = i % per_comp;
                AnyVector<C> gv = act(gens[gi], any_monomial<C>(A.carrier, p, k), A);
                if (degree_of(gv) > D) continue;  // outside the truncation
                std::vector<C> gv_coords = to_coords(gv, D);

                for (std::size_t pos = 0; pos < wide; ++pos) {
                    const std::size_t cc = pos / (D + 2);
                    const std::size_t kk = pos % (D + 2);
                    std::vector<C> row(ncols, C(0));
                    bool nonzero = false;
                    // T(g v) contribution at (cc, kk), only below the bound.
                    if (kk <= static_cast<std::size_t>(D)) {
                        for (std::size_t j = 0; j < n_basis; ++j) {
                            if (gv_coords[j].is_zero() || image_comp(j) != cc) continue;
                            row[col_of(j, kk)] = row[col_of(j, kk)] + gv_coords[j];
                            nonzero = true;
                        }
                    }
                    // minus g . T(v) contribution.
                    const std::size_t target_comp = image_comp(i);
                    for (std::size_t kc = 0; kc < per_comp; ++kc) {
                        const auto& w = act_b[gi][target_comp * per_comp + kc];
                        if (w[pos].is_zero()) continue;
                        row[col_of(i, kc)] = row[col_of(i, kc)] - w[pos];
                        nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }

        const auto field_rows = detail::expand_rows(rows);
        const auto kernel = nullspace_basis(field_rows, ncols);

        for (std::size_t s = 0; s < kernel.size(); ++s) {
            MapMatrix<C> mat;
            mat.max_deg = D;
            mat.cols.assign(n_basis, std::vector<C>(n_basis, C(0)));
            for (std::size_t i = 0; i < n_basis; ++i)
                for (std::size_t kc = 0; kc < per_comp; ++kc)
                    mat.cols[i][image_comp(i) * per_comp + kc] =
                        coeff_from_quadrat<C>(kernel[s][col_of(i, kc)]);
            std::string label = std::string(reversing ? "parity-reversing" : "parity-preserving") +
                                " solution " + std::to_string(s);
            solutions.push_back(make_matrix_map(A, B, std::move(mat), std::move(label)));
        }
    }
    return solutions;
}

}  // namespace svir
