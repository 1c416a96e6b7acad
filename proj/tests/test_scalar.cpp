#include <catch2/catch_amalgamated.hpp>

#include "random_values.hpp"
#include "svir/quadrat.hpp"
#include "svir/scalar.hpp"

using namespace svir;

TEST_CASE("QuadRat field arithmetic") {
    QuadRat w = QuadRat::sqrt2();

    SECTION("sqrt(2) squares to 2") { CHECK(w * w == QuadRat(2)); }

    SECTION("inversion is total away from zero") {
        for (int i = 0; i < 500; ++i) {
            QuadRat c = testgen::random_nonzero_quadrat();
            CHECK(c * c.inverse() == QuadRat(1));
        }
        CHECK_THROWS_AS(QuadRat(0).inverse(), std::domain_error);
    }

    SECTION("integer powers") {
        QuadRat c(make_rational(1, 2), make_rational(3, 2));
        CHECK(c.pow(0) == QuadRat(1));
        CHECK(c.pow(3) == c * c * c);
        CHECK(c.pow(-2) * c.pow(2) == QuadRat(1));
    }
}

TEST_CASE("Scalar ring operations match the defining examples") {
    Scalar w = Scalar::sqrt2();
    Scalar q = Scalar::q_power(1);

    CHECK(w * w == Scalar(2));
    CHECK((q + Scalar::q_power(-1)) * q == Scalar::q_power(2) + Scalar(1));
    CHECK(Scalar::q_power(2) * (Scalar::alpha() + Scalar(3)) -
              Scalar::q_power(2) * Scalar::alpha() ==
          Scalar(3) * Scalar::q_power(2));
}

TEST_CASE("Scalar normal form and ring axioms") {
    SECTION("s - s normalizes to the empty term map") {
        for (int i = 0; i < 1000; ++i) {
            Scalar s = testgen::random_scalar();
            CHECK((s - s).is_zero());
            CHECK((s - s).terms().empty());
        }
    }

    SECTION("associativity, commutativity, distributivity") {
        for (int i = 0; i < 1000; ++i) {
            Scalar x = testgen::random_scalar();
            Scalar y = testgen::random_scalar();
            Scalar z = testgen::random_scalar();
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
        }
    }

    SECTION("q is a unit") {
        for (long k = -20; k <= 20; ++k)
            CHECK(Scalar::q_power(k) * Scalar::q_power(-k) == Scalar(1));
    }

    SECTION("unit inversion") {
        Scalar u = Scalar::term(-3, 0, testgen::random_nonzero_quadrat());
        CHECK(u * u.inverse() == Scalar(1));
        CHECK_THROWS_AS(Scalar::alpha().inverse(), std::domain_error);
        CHECK_THROWS_AS((Scalar(1) + Scalar::q_power(1)).inverse(), std::domain_error);
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    SECTION("pinned values") {
        SpecPoint p2(QuadRat(2), QuadRat(0));
        CHECK(Scalar::q_power(2).specialize(p2) == QuadRat(4));

        SpecPoint p1(QuadRat(1), QuadRat(3));
        CHECK((Scalar::alpha() + Scalar::q_power(-1)).specialize(p1) == QuadRat(4));

        SpecPoint pw(QuadRat::sqrt2(), QuadRat(0));
        CHECK((Scalar::sqrt2() * Scalar::q_power(1)).specialize(pw) == QuadRat(2));
    }

    SECTION("homomorphism on random pairs") {
        for (int i = 0; i < 400; ++i) {
            SpecPoint p(testgen::random_nonzero_quadrat(), testgen::random_quadrat());
            Scalar x = testgen::random_scalar();
            Scalar y = testgen::random_scalar();
            CHECK((x * y).specialize(p) == x.specialize(p) * y.specialize(p));
            CHECK((x + y).specialize(p) == x.specialize(p) + y.specialize(p));
        }
    }

    SECTION("q0 = 0 is rejected") {
        CHECK_THROWS_AS(SpecPoint(QuadRat(0), QuadRat(1)), ZeroQ);
    }
}
