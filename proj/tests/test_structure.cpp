#include <catch2/catch_amalgamated.hpp>

#include "random_values.hpp"
#include "svir/structure.hpp"

using namespace svir;

namespace {
const Family R = Family::Ramond;
const Family NS = Family::NeveuSchwarz;

RamondVector<QuadRat> qeven(std::vector<QuadRat> coeffs) {
    return {Poly<QuadRat>(VarTag::T, std::move(coeffs)), Poly<QuadRat>::zero(VarTag::T)};
}
}  // namespace

TEST_CASE("membership in the distinguished submodules") {
    auto xi = SubmodulePredicate::xi();
    CHECK(xi.member(ramond_monomial<Scalar>(Parity::Even, 1)));
    CHECK(!xi.member(ramond_monomial<Scalar>(Parity::Even, 0)));
    RamondVector<Scalar> odd_mixed(Poly<Scalar>::zero(VarTag::T),
                                   Poly<Scalar>(VarTag::T, {Scalar(1), Scalar(1)}));
    CHECK(xi.member(odd_mixed));

    auto gamma = SubmodulePredicate::gamma();
    CHECK(gamma.member(ns_monomial<Scalar>(Parity::Even, 2)));
    CHECK(!gamma.member(ns_monomial<Scalar>(Parity::Even, 0)));
    CHECK(gamma.member(ns_monomial<Scalar>(Parity::Odd, 0)));

    CHECK_THROWS_AS(gamma.member(ramond_monomial<Scalar>(Parity::Even, 1)), FamilyMismatch);
}

TEST_CASE("closure of Xi and Gamma at alpha = 0, symbolic lambda") {
    auto xi_rep = check_closure(SubmodulePredicate::xi(), 6, 5,
                                symbolic_module_with_alpha(R, Scalar(0)));
    INFO(xi_rep.summary_line());
    CHECK(xi_rep.status == CheckStatus::Pass);

    auto gamma_rep = check_closure(SubmodulePredicate::gamma(), 6, 5,
                                   symbolic_module_with_alpha(NS, Scalar(0)));
    INFO(gamma_rep.summary_line());
    CHECK(gamma_rep.status == CheckStatus::Pass);

    SECTION("alpha != 0 is rejected as a precondition") {
        CHECK_THROWS_AS(check_closure(SubmodulePredicate::xi(), 2, 2, symbolic_module(R)), Error);
    }

    SECTION("pinned quotient instance: L(3).1 = q^6 t lands in Xi") {
        auto spec = symbolic_module_with_alpha(R, Scalar(0));
        auto image = act(Generator::L(3, R), ramond_monomial<Scalar>(Parity::Even, 0), spec);
        RamondVector<Scalar> expected(
            VarPoly(VarTag::T, {Scalar(0), Scalar::q_power(6)}), VarPoly::zero(VarTag::T));
        CHECK(image == expected);
        CHECK(SubmodulePredicate::xi().member(image));
    }
}

TEST_CASE("span basis insertion is idempotent on dependent vectors") {
    SpanBasis basis(R, 6);
    basis.insert(qeven({QuadRat(1), QuadRat(2)}));
    basis.insert(qeven({QuadRat(0), QuadRat(1), QuadRat(3)}));
    const std::size_t rank = basis.rank();

    // A linear combination of the existing rows must not change anything.
    RamondVector<QuadRat> combo =
        QuadRat(3) * qeven({QuadRat(1), QuadRat(2)}) +
        QuadRat(make_rational(-1, 2)) * qeven({QuadRat(0), QuadRat(1), QuadRat(3)});
    CHECK(!basis.insert(combo).has_value());
    CHECK(basis.rank() == rank);

    for (int i = 0; i < 50; ++i) {
        QuadRat c1 = testgen::random_quadrat();
        QuadRat c2 = testgen::random_quadrat();
        RamondVector<QuadRat> mix = c1 * qeven({QuadRat(1), QuadRat(2)}) +
                                    c2 * qeven({QuadRat(0), QuadRat(1), QuadRat(3)});
        if (mix.is_zero()) continue;
        CHECK(!basis.insert(mix).has_value());
    }
}

TEST_CASE("cyclic span reaches the constant vector when alpha != 0") {
    auto spec = module_at(R, SpecPoint(QuadRat(1), QuadRat(1)));
    SpanOptions opt{/*window=*/2, /*max_words=*/4, /*max_deg=*/12};

    RamondVector<QuadRat> seed_t = qeven({QuadRat(0), QuadRat(1)});
    SpanBasis basis = cyclic_span(seed_t, spec, opt);
    CHECK(basis.contains_constant());

    SECTION("monotone in the word bound") {
        for (long words = 0; words < 4; ++words) {
            SpanOptions small = opt;
            small.max_words = words;
            SpanOptions big = opt;
            big.max_words = words + 1;
            SpanBasis s = cyclic_span(seed_t, spec, small);
            SpanBasis b = cyclic_span(seed_t, spec, big);
            for (const auto& row : s.rows()) CHECK(b.contains_row(row));
        }
    }

    SECTION("fixpoint mode saturates the truncated space") {
        SpanOptions fp = opt;
        fp.fixpoint = true;
        fp.max_deg = 5;
        SpanBasis b = cyclic_span(seed_t, spec, fp);
        CHECK(b.rank() == 2 * (5 + 1));
    }
}

TEST_CASE("cyclic span at alpha = 0 stays inside Xi") {
    auto spec = module_at(R, SpecPoint(QuadRat(1), QuadRat(0)));
    SpanOptions opt{/*window=*/2, /*max_words=*/8, /*max_deg=*/12};
    RamondVector<QuadRat> seed_t = qeven({QuadRat(0), QuadRat(1)});

    VerificationReport rep =
        probe_span_stays_inside(SubmodulePredicate::xi(), seed_t, spec, opt);
    INFO(rep.summary_line());
    CHECK(rep.status == CheckStatus::Pass);
    CHECK(!cyclic_span(seed_t, spec, opt).contains_constant());
}

TEST_CASE("restricted NS action also generates everything when alpha != 0") {
    auto spec = module_at(R, SpecPoint(QuadRat(1), QuadRat(1))).restricted_via_sigma();
    SpanOptions opt{/*window=*/2, /*max_words=*/6, /*max_deg=*/12};

    SpanBasis from_even = cyclic_span(qeven({QuadRat(0), QuadRat(1)}), spec, opt);
    CHECK(from_even.contains_constant());

    RamondVector<QuadRat> seed_x(Poly<QuadRat>::zero(VarTag::T),
                                 Poly<QuadRat>::constant(VarTag::T, QuadRat(1)));
    SpanBasis from_odd = cyclic_span(seed_x, spec, opt);
    CHECK(from_odd.contains_constant());
}

TEST_CASE("simplicity evidence probe over sample points") {
    SpanOptions opt{/*window=*/2, /*max_words=*/6, /*max_deg=*/12};
    for (const SpecPoint& p : {SpecPoint(QuadRat(1), QuadRat(1)),
                               SpecPoint(QuadRat(2), QuadRat(make_rational(-1, 3)))}) {
        VerificationReport rep = probe_simplicity(module_at(R, p), 3, opt);
        INFO(rep.summary_line());
        CHECK(rep.status == CheckStatus::Evidence);
        CHECK(rep.evidence_only);
        CHECK(rep.failures == 0);
    }
}

TEST_CASE("freeness over the Cartan subalgebra") {
    SECTION("pinned: L0^2 . 1 = t^2") {
        auto spec = symbolic_module(R);
        auto v = act(Generator::L(0, R), act(Generator::L(0, R),
                                             ramond_monomial<Scalar>(Parity::Even, 0), spec),
                     spec);
        CHECK(v == ramond_monomial<Scalar>(Parity::Even, 2));
    }

    SECTION("symbolic rank checks at degree 5") {
        auto ram = freeness_check(symbolic_module(R), 5);
        INFO(ram.summary_line());
        CHECK(ram.status == CheckStatus::Pass);

        auto ns = freeness_check(symbolic_module(NS), 5);
        INFO(ns.summary_line());
        CHECK(ns.status == CheckStatus::Pass);
    }

    SECTION("specialized points too") {
        auto rep = freeness_check(module_at(R, SpecPoint(QuadRat(2), QuadRat(1))), 4);
        CHECK(rep.status == CheckStatus::Pass);
    }
}
