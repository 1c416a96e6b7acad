#include <catch2/catch_amalgamated.hpp>

#include "svir/algebra.hpp"

using namespace svir;

namespace {
const Family R = Family::Ramond;
const Family NS = Family::NeveuSchwarz;

AlgebraElement gen(GenKind k, long twice, Family f) {
    return AlgebraElement::basis(Generator(k, HalfInt::from_twice(twice), f));
}
}  // namespace

TEST_CASE("generator invariants") {
    CHECK_NOTHROW(Generator::L(-2, R));
    CHECK_NOTHROW(Generator::G(HalfInt::from_twice(1), NS));
    CHECK_NOTHROW(Generator::G(3, R));
    CHECK_THROWS_AS(Generator(GenKind::L, HalfInt::from_twice(1), R), FamilyMismatch);
    CHECK_THROWS_AS(Generator::G(HalfInt::from_twice(1), R), FamilyMismatch);
    CHECK_THROWS_AS(Generator::G(2, NS), FamilyMismatch);
    CHECK(Generator::L(0, R).parity() == Parity::Even);
    CHECK(Generator::G(0, R).parity() == Parity::Odd);
}

TEST_CASE("bracket structure relations") {
    CHECK(bracket(Generator::L(2, R), Generator::L(-1, R)) ==
          Scalar(3) * AlgebraElement::basis(Generator::L(1, R)));

    CHECK(bracket(Generator::L(1, NS), Generator::G(HalfInt::from_twice(1), NS)).is_zero());

    CHECK(bracket(Generator::G(0, R), Generator::G(0, R)) ==
          Scalar(2) * AlgebraElement::basis(Generator::L(0, R)));

    // [L_1, G_{-1/2}] = (1/2 + 1/2) G_{1/2}
    CHECK(bracket(Generator::L(1, NS), Generator::G(HalfInt::from_twice(-1), NS)) ==
          AlgebraElement::basis(Generator::G(HalfInt::from_twice(1), NS)));

    CHECK_THROWS_AS(bracket(gen(GenKind::L, 2, R), gen(GenKind::L, 2, NS)), FamilyMismatch);
}

TEST_CASE("super-antisymmetry and index grading") {
    for (Family fam : {R, NS}) {
        const auto gens = basis_window(fam, 6);
        for (const auto& a : gens) {
            for (const auto& b : gens) {
                AlgebraElement lhs = bracket(a, b);
                int sign = parity_sign(a.parity(), b.parity());
                AlgebraElement rhs = Scalar(-sign) * bracket(b, a);
                CHECK(lhs == rhs);
                for (const auto& [g, c] : lhs.terms())
                    CHECK(g.index() == a.index() + b.index());
            }
        }
    }
}

TEST_CASE("graded Jacobi sweep") {
    SECTION("window 3, both families") {
        for (Family fam : {R, NS}) {
            VerificationReport rep = check_super_jacobi(fam, 3);
            INFO(rep.summary_line());
            CHECK(rep.status == CheckStatus::Pass);
            CHECK(rep.witnesses.empty());
        }
    }

    SECTION("one triple by hand") {
        AlgebraElement a = gen(GenKind::L, 2, R);
        AlgebraElement b = gen(GenKind::L, 4, R);
        AlgebraElement c = gen(GenKind::L, 6, R);
        AlgebraElement sum = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                             bracket(c, bracket(a, b));
        CHECK(sum.is_zero());
    }
}

TEST_CASE("sigma_lambda scales generators by q^(2 index)") {
    CHECK(twist_sigma_lambda(gen(GenKind::L, 2, R)) ==
          Scalar::q_power(2) * gen(GenKind::L, 2, R));
    CHECK(twist_sigma_lambda(gen(GenKind::L, 0, R)) == gen(GenKind::L, 0, R));
    CHECK(twist_sigma_lambda(gen(GenKind::G, 1, NS)) ==
          Scalar::q_power(1) * gen(GenKind::G, 1, NS));
}

TEST_CASE("sigma_lambda is an algebra homomorphism") {
    for (Family fam : {R, NS}) {
        const auto gens = basis_window(fam, 4);
        for (const auto& a : gens) {
            for (const auto& b : gens) {
                AlgebraElement ea = AlgebraElement::basis(a);
                AlgebraElement eb = AlgebraElement::basis(b);
                CHECK(twist_sigma_lambda(bracket(ea, eb)) ==
                      bracket(twist_sigma_lambda(ea), twist_sigma_lambda(eb)));
            }
        }
    }
}

TEST_CASE("embedding of NS into the Ramond algebra") {
    Scalar half(make_rational(1, 2));
    Scalar inv_sqrt2(QuadRat(Rational(0), make_rational(1, 2)));

    CHECK(embed_sigma(gen(GenKind::L, 2, NS)) == half * gen(GenKind::L, 4, R));
    CHECK(embed_sigma(gen(GenKind::G, 1, NS)) == inv_sqrt2 * gen(GenKind::G, 2, R));
    CHECK_THROWS_AS(embed_sigma(gen(GenKind::L, 0, R)), FamilyMismatch);

    SECTION("the 1/sqrt(2) normalization makes sigma a homomorphism") {
        AlgebraElement g_half = gen(GenKind::G, 1, NS);
        CHECK(embed_sigma(bracket(g_half, g_half)) ==
              bracket(embed_sigma(g_half), embed_sigma(g_half)));
        CHECK(bracket(embed_sigma(g_half), embed_sigma(g_half)) ==
              AlgebraElement::basis(Generator::L(2, R)));

        const auto gens = basis_window(NS, 4);
        for (const auto& a : gens) {
            for (const auto& b : gens) {
                AlgebraElement ea = AlgebraElement::basis(a);
                AlgebraElement eb = AlgebraElement::basis(b);
                CHECK(embed_sigma(bracket(ea, eb)) ==
                      bracket(embed_sigma(ea), embed_sigma(eb)));
            }
        }
    }
}
