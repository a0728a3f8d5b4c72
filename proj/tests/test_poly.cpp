#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logcsm/parser.hpp"
#include "logcsm/polynomial.hpp"

using namespace logcsm;

namespace {

const std::vector<std::string> XY = {"x", "y"};

Polynomial P(const std::string& s) { return parse_polynomial(s, XY); }

Polynomial random_poly(std::mt19937& rng, int nvars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-5, 5),
        nterms(0, max_terms);
    Polynomial p(nvars);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m(nvars);
        for (int v = 0; v < nvars; ++v) m[v] = deg(rng);
        p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("addition") {
    CHECK(P("x + y") + P("x - y") == P("2*x"));
    Polynomial p = P("3*x^2 - y");
    CHECK(p + Polynomial::zero(2) == p);
    CHECK(P("x^2 - y^3") + P("y^3") == P("x^2"));
}

TEST_CASE("multiplication") {
    CHECK(P("x") * P("y") == P("x*y"));
    // reused as c(F) for the rank-3 braid case in chow tests
    CHECK(P("1 - x") * P("1 - 2*x") == P("1 - 3*x + 2*x^2"));
    Polynomial p = P("x^2*y - 7");
    CHECK(p * P("1") == p);
}

TEST_CASE("variable-list mismatch") {
    CHECK_THROWS_AS(P("x") + Polynomial::zero(3), std::invalid_argument);
    CHECK_THROWS_AS(P("x") * Polynomial::zero(1), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    CHECK(P("x*y").derivative(0) == P("y"));
    CHECK(P("x^2 - y^3").derivative(1) == P("-3*y^2"));
    CHECK(P("42").derivative(0).is_zero());
    CHECK_THROWS_AS(P("x").derivative(2), std::out_of_range);
}

TEST_CASE("leading terms") {
    Polynomial p = P("x^2 - y^3");
    auto [m_grevlex, c_grevlex] = p.leading_term(MonomialOrder::grevlex());
    CHECK(m_grevlex == Monomial{0, 3});
    CHECK(c_grevlex == Rational(-1));
    auto [m_lex, c_lex] = p.leading_term(MonomialOrder::lex());
    CHECK(m_lex == Monomial{2, 0});
    CHECK(c_lex == Rational(1));
    auto [m1, c1] = P("5*x*y").leading_term(MonomialOrder::grevlex());
    CHECK(m1 == Monomial{1, 1});
    CHECK(c1 == Rational(5));
    CHECK_THROWS_AS(Polynomial::zero(2).leading_term(MonomialOrder::lex()),
                    std::domain_error);
}

TEST_CASE("parser basics") {
    CHECK(P("x*y").term_count() == 1);
    CHECK(P("x^2 - y^3") == Polynomial::term({2, 0}, Rational(1)) +
                                Polynomial::term({0, 3}, Rational(-1)));
    CHECK_THROWS_AS(P("x + "), ParseError);
    CHECK_THROWS_AS(P("x*z"), ParseError);  // unknown variable
    CHECK_THROWS_AS(P("2x"), ParseError);   // implicit multiplication
    CHECK_THROWS_AS(P("x^0"), ParseError);  // exponents are positive
}

TEST_CASE("format / parse round trip") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(rng, 2, 4, 6);
        std::string s = p.to_string(XY);
        CHECK(parse_polynomial(s, XY) == p);
        CHECK(parse_polynomial(s, XY).to_string(XY) == s);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = random_poly(rng, 3, 3, 5);
        Polynomial b = random_poly(rng, 3, 3, 5);
        Polynomial c = random_poly(rng, 3, 3, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("Leibniz rule") {
    std::mt19937 rng(13);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = random_poly(rng, 2, 3, 5);
        Polynomial q = random_poly(rng, 2, 3, 5);
        for (int v = 0; v < 2; ++v)
            CHECK((p * q).derivative(v) == p * q.derivative(v) + q * p.derivative(v));
    }
}

TEST_CASE("monomial orders are multiplicative") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> deg(0, 4);
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grlex(),
                                         MonomialOrder::grevlex(), MonomialOrder::block(1)};
    for (int i = 0; i < 200; ++i) {
        Monomial m1(3), m2(3), m(3);
        for (int v = 0; v < 3; ++v) {
            m1[v] = deg(rng);
            m2[v] = deg(rng);
            m[v] = deg(rng);
        }
        for (auto& ord : orders) {
            if (ord.less(m1, m2))
                CHECK(ord.less(mono_mul(m, m1), mono_mul(m, m2)));
            if (m1 != m2)
                CHECK(ord.less(m1, m2) != ord.less(m2, m1));  // totality
        }
    }
}
