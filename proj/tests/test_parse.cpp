#include <catch2/catch_amalgamated.hpp>

#include "random_values.hpp"
#include "svir/parse.hpp"

using namespace svir;

namespace {
const Family R = Family::Ramond;
const Family NS = Family::NeveuSchwarz;

AlgebraElement random_element(Family fam) {
    AlgebraElement e(fam);
    long terms = testgen::pick(0, 4);
    for (long i = 0; i < terms; ++i) {
        long twice = fam == R ? 2 * testgen::pick(-4, 4)
                              : (testgen::pick(0, 1) ? 2 * testgen::pick(-4, 4)
                                                     : 2 * testgen::pick(-4, 4) + 1);
        GenKind kind = twice % 2 == 0 && testgen::pick(0, 1) ? GenKind::L : GenKind::G;
        if (kind == GenKind::L && twice % 2 != 0) twice -= 1;
        if (fam == NS && kind == GenKind::G && twice % 2 == 0) twice += 1;
        e += AlgebraElement::from(Generator(kind, HalfInt::from_twice(twice), fam),
                                  testgen::random_scalar(2));
    }
    return e;
}
}  // namespace

TEST_CASE("pinned grammar examples") {
    AlgebraElement e = parse_element("2*L(1) + q*G(0)", R);
    CHECK(e.terms().size() == 2);
    CHECK(e == Scalar(2) * AlgebraElement::basis(Generator::L(1, R)) +
                   Scalar::q_power(1) * AlgebraElement::basis(Generator::G(0, R)));

    auto v = parse_vector("[even: t^2 | odd: 0]", R);
    CHECK(std::get<RamondVector<Scalar>>(v) ==
          RamondVector<Scalar>(VarPoly::monomial(VarTag::T, Scalar(1), 2),
                               VarPoly::zero(VarTag::T)));

    CHECK_THROWS_AS(parse_generator("G(1/2)", R), FamilyMismatch);
    CHECK_NOTHROW(parse_generator("G(1/2)", NS));
    CHECK_NOTHROW(parse_generator("L(-2)", R));
}

TEST_CASE("scalar forms") {
    CHECK(parse_scalar("q^-2") == Scalar::q_power(-2));
    CHECK(parse_scalar("3/2") == Scalar(make_rational(3, 2)));
    CHECK(parse_scalar("w*q") == Scalar::sqrt2() * Scalar::q_power(1));
    CHECK(parse_scalar("(1 + w)*a") == (Scalar(1) + Scalar::sqrt2()) * Scalar::alpha());
    CHECK(parse_scalar("q^2*(a+1/2)") ==
          Scalar::q_power(2) * (Scalar::alpha() + Scalar(make_rational(1, 2))));
    CHECK(parse_scalar("-q") == -Scalar::q_power(1));
    CHECK(parse_scalar("a^3*q^(-1)") == Scalar::alpha(3) * Scalar::q_power(-1));
    CHECK(parse_scalar("0") == Scalar(0));
}

TEST_CASE("parse errors carry a position and a hint") {
    CHECK_THROWS_AS(parse_scalar("q^"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 +"), ParseError);
    CHECK_THROWS_AS(parse_scalar("3 * * 4"), ParseError);
    CHECK_THROWS_AS(parse_scalar("a^-1"), ParseError);
    CHECK_THROWS_AS(parse_scalar("b"), ParseError);
    CHECK_THROWS_AS(parse_poly("t + x"), ParseError);
    CHECK_THROWS_AS(parse_vector("[even: x | odd: x]", NS), ParseError);
    CHECK_THROWS_AS(parse_vector("[even: t | odd: t", R), ParseError);
    CHECK_THROWS_AS(parse_generator("L(1/2)", R), FamilyMismatch);
    CHECK_THROWS_AS(parse_generator("G(1/3)", NS), ParseError);
    CHECK_THROWS_AS(parse_element("2*3", R), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 2"), ParseError);

    try {
        parse_scalar("q^^2");
        FAIL("expected a ParseError");
    } catch (const ParseError& err) {
        CHECK(err.position() == 2);
    }
}

TEST_CASE("round trip: scalars") {
    for (int i = 0; i < 500; ++i) {
        Scalar s = testgen::random_scalar(5);
        CHECK(parse_scalar(s.to_string()) == s);
    }
}

TEST_CASE("round trip: polynomials") {
    for (int i = 0; i < 300; ++i) {
        std::vector<Scalar> coeffs;
        long deg = testgen::pick(0, 6);
        for (long k = 0; k <= deg; ++k) coeffs.push_back(testgen::random_scalar(3));
        for (VarTag tag : {VarTag::T, VarTag::X, VarTag::Y}) {
            VarPoly p(tag, coeffs);
            CHECK(parse_poly(p.to_string(), tag) == p);
        }
    }
}

TEST_CASE("round trip: vectors") {
    for (int i = 0; i < 200; ++i) {
        RamondVector<Scalar> v(
            VarPoly(VarTag::T, {testgen::random_scalar(2), testgen::random_scalar(2)}),
            VarPoly(VarTag::T, {testgen::random_scalar(2)}));
        CHECK(std::get<RamondVector<Scalar>>(parse_vector(v.to_string(), R)) == v);

        NSVector<Scalar> u(
            Poly<Scalar>(VarTag::X, {testgen::random_scalar(2)}),
            Poly<Scalar>(VarTag::Y, {testgen::random_scalar(2), testgen::random_scalar(2)}));
        CHECK(std::get<NSVector<Scalar>>(parse_vector(u.to_string(), NS)) == u);
    }
}

TEST_CASE("round trip: algebra elements") {
    for (int i = 0; i < 300; ++i) {
        for (Family fam : {R, NS}) {
            AlgebraElement e = random_element(fam);
            CHECK(parse_element(e.to_string(), fam) == e);
        }
    }
}

TEST_CASE("expression dispatch") {
    auto s = parse_expression("q^2 + a");
    CHECK(std::holds_alternative<Scalar>(s));

    auto e = parse_expression("L(1) - G(0)", R);
    CHECK(std::holds_alternative<AlgebraElement>(e));

    auto v = parse_expression("[even: t | odd: 0]");
    REQUIRE(std::holds_alternative<AnyVector<Scalar>>(v));
    CHECK(std::holds_alternative<RamondVector<Scalar>>(std::get<AnyVector<Scalar>>(v)));

    auto u = parse_expression("[even: x + 1 | odd: y^2]");
    CHECK(std::holds_alternative<NSVector<Scalar>>(std::get<AnyVector<Scalar>>(u)));

    CHECK_THROWS_AS(parse_expression("[even: 1 | odd: 0]"), ParseError);
    CHECK_THROWS_AS(parse_expression("L(1)"), ParseError);
}
