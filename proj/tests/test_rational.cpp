#include <catch2/catch_amalgamated.hpp>

#include <moqc/rational.hpp>

using moqc::Rational;

TEST_CASE("rationals normalize on construction", "[rational]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK(Rational(6, 3) == Rational::integer(2));
    CHECK(Rational(5, 3).den == 3);
    CHECK(Rational(12, 9).num == 4);
    CHECK(Rational(12, 9).den == 3);
}

TEST_CASE("comparison avoids overflow via wide intermediates", "[rational]") {
    Rational a(1000000007LL, 1000000009LL);
    Rational b(1000000005LL, 1000000007LL);
    CHECK(a > b);
    CHECK(b < a);
    CHECK(a >= a);
    CHECK(a <= a);
    CHECK(a != b);

    // close fractions with large terms
    Rational c(999999999999LL, 1000000000000LL);
    Rational d(999999999998LL, 999999999999LL);
    CHECK(c > d);
}

TEST_CASE("ordering matches cross multiplication on small cases", "[rational]") {
    for (long long p1 = -6; p1 <= 6; ++p1)
        for (long long q1 = 1; q1 <= 5; ++q1)
            for (long long p2 = -6; p2 <= 6; ++p2)
                for (long long q2 = 1; q2 <= 5; ++q2) {
                    bool lhs = Rational(p1, q1) < Rational(p2, q2);
                    bool rhs = p1 * q2 < p2 * q1;
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("string form is p/q with integers bare", "[rational]") {
    CHECK(Rational(2, 3).to_string() == "2/3");
    CHECK(Rational(4, 4).to_string() == "1");
    CHECK(Rational(0, 1).to_string() == "0");
    CHECK(Rational(8, 21).to_string() == "8/21");
    CHECK(Rational(2, 3).to_double() == Catch::Approx(2.0 / 3.0));
}

TEST_CASE("zero denominator is rejected", "[rational]") {
    CHECK_THROWS(Rational(1, 0));
}
