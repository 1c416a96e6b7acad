#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "svir/algebra.hpp"
#include "svir/errors.hpp"
#include "svir/linalg.hpp"
#include "svir/modules.hpp"
#include "svir/morphisms.hpp"
#include "svir/report.hpp"

namespace svir {

enum class PredicateName { Xi, Gamma, FullSpace };

/// Membership test for the distinguished submodules at alpha = 0: the even
/// part must be divisible by the module variable (zero constant term), the
/// odd part is unrestricted. FullSpace accepts everything.
class SubmodulePredicate {
public:
    static SubmodulePredicate xi() { return {PredicateName::Xi, Family::Ramond}; }
    static SubmodulePredicate gamma() { return {PredicateName::Gamma, Family::NeveuSchwarz}; }
    static SubmodulePredicate full(Family family) { return {PredicateName::FullSpace, family}; }

    PredicateName name() const noexcept { return name_; }
    Family family() const noexcept { return family_; }

    template <class C>
    bool member(const RamondVector<C>& v) const {
        if (family_ != Family::Ramond)
            throw FamilyMismatch("membership: Ramond vector tested against a Neveu-Schwarz set");
        if (name_ == PredicateName::FullSpace) return true;
        return v.even.coeff(0).is_zero();
    }

    template <class C>
    bool member(const NSVector<C>& v) const {
        if (family_ != Family::NeveuSchwarz)
            throw FamilyMismatch("membership: Neveu-Schwarz vector tested against a Ramond set");
        if (name_ == PredicateName::FullSpace) return true;
        return v.even.coeff(0).is_zero();
    }

    template <class C>
    bool member(const AnyVector<C>& v) const {
        return std::visit([&](const auto& vec) { return member(vec); }, v);
    }

    std::string to_string() const {
        switch (name_) {
            case PredicateName::Xi: return "Xi";
            case PredicateName::Gamma: return "Gamma";
            default: return "full-space";
        }
    }

private:
    SubmodulePredicate(PredicateName name, Family family) : name_(name), family_(family) {}
    PredicateName name_;
    Family family_;
};

/// Sweep every generator with |index| <= window over every predicate member
/// among the basis monomials of degree <= max_deg: images must stay in the
/// set. Also checks the quotient is trivial: every g . 1 lands in the set,
/// so the coset of the constant vector is annihilated. Requires alpha = 0.
template <class C>
VerificationReport check_closure(const SubmodulePredicate& pred, long window, long max_deg,
                                 const ModuleSpec<C>& spec) {
    auto start = std::chrono::steady_clock::now();
    if (pred.family() != spec.carrier)
        throw FamilyMismatch("check_closure: predicate family does not match the module");
    if (!spec.alpha.is_zero())
        throw Error("check_closure: the submodule exists only at alpha = 0");

    VerificationReport report;
    report.check_name = "submodule-closure";
    report.parameters = pred.to_string() + " in " + spec.params_string();
    report.window = window;
    report.max_deg = max_deg;

    const auto gens = basis_window(spec.acting_family(), window);
    std::vector<AnyVector<C>> members;
    const long even_start = pred.name() == PredicateName::FullSpace ? 0 : 1;
    for (long k = even_start; k <= max_deg; ++k)
        members.push_back(any_monomial<C>(spec.carrier, Parity::Even, k));
    for (long k = 0; k <= max_deg; ++k)
        members.push_back(any_monomial<C>(spec.carrier, Parity::Odd, k));

    for (const auto& g : gens) {
        for (const auto& v : members) {
            AnyVector<C> image = act(g, v, spec);
            ++report.checks;
            if (!pred.member(image)) {
                report.record_failure("g=" + g.to_string() + ", v=" + to_string(v),
                                      to_string(image), "member of " + pred.to_string());
            }
        }
        // Trivial quotient: the coset of 1 is killed by every generator.
        AnyVector<C> unit = any_monomial<C>(spec.carrier, Parity::Even, 0);
        AnyVector<C> image = act(g, unit, spec);
        ++report.checks;
        if (!pred.member(image)) {
            report.record_failure("g=" + g.to_string() + ", v=" + to_string(unit),
                                  to_string(image), "member of " + pred.to_string());
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Row-echelon span of vectors at a concrete parameter point, graded by the
/// flat (component, degree) coordinates. Insertion is idempotent on
/// dependent vectors.
class SpanBasis {
public:
    SpanBasis(Family carrier, long max_deg)
        : carrier_(carrier),
          bound_(max_deg),
          reducer_(2 * static_cast<std::size_t>(max_deg + 1)) {}

    Family carrier() const noexcept { return carrier_; }
    long bound() const noexcept { return bound_; }
    std::size_t rank() const noexcept { return reducer_.rank(); }

    template <class V>
    std::optional<V> insert(const V& v) {
        auto reduced = reducer_.insert(to_coords(v, bound_));
        if (!reduced) return std::nullopt;
        return reconstruct<V>(*reduced);
    }

    template <class V>
    bool contains(const V& v) const {
        return reducer_.contains(to_coords(v, bound_));
    }

    /// Whether the constant vector 1 (degree-0 even monomial) is in the span.
    bool contains_constant() const {
        std::vector<QuadRat> e0(reducer_.width(), QuadRat(0));
        e0[0] = QuadRat(1);
        return reducer_.contains(e0);
    }

    const std::vector<std::vector<QuadRat>>& rows() const noexcept { return reducer_.rows(); }

    bool contains_row(const std::vector<QuadRat>& coords) const {
        return reducer_.contains(coords);
    }

    std::vector<std::string> row_strings() const {
        std::vector<std::string> out;
        for (const auto& r : reducer_.rows())
            out.push_back(svir::to_string(any_from_coords<QuadRat>(carrier_, r, bound_)));
        return out;
    }

    /// Every stored row satisfies the predicate (a linear condition, so this
    /// is equivalent to the whole span satisfying it).
    bool all_rows_member(const SubmodulePredicate& pred) const {
        for (const auto& r : reducer_.rows())
            if (!pred.member(any_from_coords<QuadRat>(carrier_, r, bound_))) return false;
        return true;
    }

private:
    template <class V>
    V reconstruct(const std::vector<QuadRat>& coords) const {
        return std::get<V>(any_from_coords<QuadRat>(carrier_, coords, bound_));
    }

    Family carrier_;
    long bound_;
    RowReducer<QuadRat> reducer_;
};

struct SpanOptions {
    long window = 2;
    long max_words = 6;
    long max_deg = 12;
    bool fixpoint = false;
};

/// Breadth-first generation of the cyclic submodule through `seed`: words in
/// the generators of |index| <= window are applied in a fixed order (index
/// ascending, L before G), products whose degree exceeds max_deg are
/// discarded, and only words whose vector is independent of the span so far
/// are expanded further. With `fixpoint` the word-length cap is ignored and
/// the loop runs until the span stabilizes.
template <class V>
SpanBasis cyclic_span(const V& seed, const ModuleSpec<QuadRat>& spec, const SpanOptions& opt) {
    if (seed.is_zero()) throw Error("cyclic_span: seed must be nonzero");
    if (seed.degree() > opt.max_deg)
        throw DegreeOverflow("cyclic_span: seed degree exceeds max_deg");

    auto gens = basis_window(spec.acting_family(), opt.window);
    std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
        if (a.index().twice() != b.index().twice()) return a.index().twice() < b.index().twice();
        return a.kind() == GenKind::L && b.kind() == GenKind::G;
    });

    SpanBasis basis(spec.carrier, opt.max_deg);
    std::vector<V> frontier;
    if (auto row = basis.insert(seed)) frontier.push_back(*row);

    for (long depth = 0; !frontier.empty() && (opt.fixpoint || depth < opt.max_words); ++depth) {
        std::vector<V> next;
        for (const V& v : frontier) {
            for (const Generator& g : gens) {
                V image = act(g, v, spec);
                if (image.is_zero() || image.degree() > opt.max_deg) continue;
                if (auto row = basis.insert(image)) next.push_back(*row);
            }
        }
        frontier = std::move(next);
    }
    return basis;
}

/// Evidence probe: from every monomial seed of degree <= seed_deg, the
/// cyclic span reaches the constant vector. Never a proof of simplicity;
/// reports carry evidence_only and the word count at which 1 appeared.
inline VerificationReport probe_simplicity(const ModuleSpec<QuadRat>& spec, long seed_deg,
                                           const SpanOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check_name = "simplicity-evidence";
    report.parameters = spec.params_string();
    report.window = opt.window;
    report.max_deg = opt.max_deg;
    report.max_words = opt.max_words;
    report.evidence_only = true;
    report.status = CheckStatus::Evidence;

    std::vector<AnyVector<QuadRat>> seeds;
    for (long k = 0; k <= seed_deg; ++k) {
        seeds.push_back(any_monomial<QuadRat>(spec.carrier, Parity::Even, k));
        seeds.push_back(any_monomial<QuadRat>(spec.carrier, Parity::Odd, k));
    }

    for (const auto& seed : seeds) {
        ++report.checks;
        long reached_at = -1;
        std::size_t final_rank = 0;
        for (long words = 0; words <= opt.max_words; ++words) {
            SpanOptions step = opt;
            step.max_words = words;
            SpanBasis basis = std::visit(
                [&](const auto& s) { return cyclic_span(s, spec, step); }, seed);
            final_rank = basis.rank();
            if (basis.contains_constant()) {
                reached_at = words;
                break;
            }
        }
        if (reached_at >= 0) {
            report.witness_rows.push_back("seed " + to_string(seed) + ": reached 1 after " +
                                          std::to_string(reached_at) + " words");
        } else {
            report.record_failure("seed " + to_string(seed),
                                  "constant vector not reached (rank " +
                                      std::to_string(final_rank) + ")",
                                  "constant vector in span");
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Evidence probe for alpha = 0: the cyclic span of a seed inside the
/// distinguished submodule never leaves it.
template <class V>
VerificationReport probe_span_stays_inside(const SubmodulePredicate& pred, const V& seed,
                                           const ModuleSpec<QuadRat>& spec,
                                           const SpanOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check_name = "span-stays-in-submodule";
    report.parameters = pred.to_string() + " in " + spec.params_string();
    report.window = opt.window;
    report.max_deg = opt.max_deg;
    report.max_words = opt.max_words;

    if (!pred.member(seed)) throw NotInSubmodule("probe: seed is outside the submodule");
    SpanBasis basis = cyclic_span(seed, spec, opt);
    report.checks = static_cast<long>(basis.rank());
    if (!basis.all_rows_member(pred)) {
        for (const auto& row : basis.row_strings()) report.witness_rows.push_back(row);
        report.record_failure("seed " + seed.to_string(), "span left " + pred.to_string(),
                              "span inside " + pred.to_string());
    } else {
        report.witness_rows = basis.row_strings();
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Freeness over the Cartan subalgebra, degree-truncated: for the Ramond
/// family the vectors L0^k . 1 and G0 . L0^k . 1 (k <= max_deg) must be
/// independent and span everything of degree <= max_deg (rank 1 over
/// C[L0] + G0 C[L0]); for the Neveu-Schwarz family the vectors L0^k . 1_even
/// and L0^k . 1_odd must do the same (rank 2 over C[L0]).
template <class C>
VerificationReport freeness_check(const ModuleSpec<C>& spec, long max_deg) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.check_name = "cartan-freeness";
    report.parameters = spec.params_string();
    report.max_deg = max_deg;

    const Generator l0 = Generator::L(0, spec.acting_family());
    std::vector<AnyVector<C>> generated;
    std::vector<std::string> labels;

    if (spec.carrier == Family::Ramond) {
        const Generator g0 = Generator::G(0, spec.acting_family());
        AnyVector<C> v = any_monomial<C>(spec.carrier, Parity::Even, 0);
        for (long k = 0; k <= max_deg; ++k) {
            generated.push_back(v);
            labels.push_back("L0^" + std::to_string(k) + ".1");
            generated.push_back(act(g0, v, spec));
            labels.push_back("G0.L0^" + std::to_string(k) + ".1");
            v = act(l0, v, spec);
        }
    } else {
        AnyVector<C> ve = any_monomial<C>(spec.carrier, Parity::Even, 0);
        AnyVector<C> vo = any_monomial<C>(spec.carrier, Parity::Odd, 0);
        for (long k = 0; k <= max_deg; ++k) {
            generated.push_back(ve);
            labels.push_back("L0^" + std::to_string(k) + ".1even");
            generated.push_back(vo);
            labels.push_back("L0^" + std::to_string(k) + ".1odd");
            ve = act(l0, ve, spec);
            vo = act(l0, vo, spec);
        }
    }

    RowReducer<C> reducer(2 * static_cast<std::size_t>(max_deg + 1));
    for (std::size_t i = 0; i < generated.size(); ++i) {
        ++report.checks;
        if (!reducer.insert(to_coords(generated[i], max_deg))) {
            report.record_failure(labels[i], to_string(generated[i]),
                                  "independent of the previous vectors");
        }
    }
    ++report.checks;
    if (reducer.rank() != reducer.width()) {
        report.record_failure("span", "rank " + std::to_string(reducer.rank()),
                              "rank " + std::to_string(reducer.width()));
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace svir
