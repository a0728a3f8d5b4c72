#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "logcsm/arrangement.hpp"

using namespace logcsm;

namespace {

Arrangement make(int n, std::vector<std::vector<long long>> rows) {
    Arrangement A;
    A.n = n;
    for (auto& r : rows) {
        std::vector<Rational> h;
        for (long long x : r) h.push_back(Rational(x));
        A.hyperplanes.push_back(std::move(h));
    }
    return A;
}

// xyz(x-y)(x-z)(y-z): the rank-3 braid arrangement, essential in P^2
Arrangement braid_p2() {
    return make(2, {{1, 0, 0},
                    {0, 1, 0},
                    {0, 0, 1},
                    {1, -1, 0},
                    {1, 0, -1},
                    {0, 1, -1}});
}

std::vector<Arrangement> fixtures() {
    return {
        make(1, {{1, 0}, {0, 1}}),
        make(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
        braid_p2(),
        make(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}),
        make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                 {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 1}}),
    };
}

}  // namespace

TEST_CASE("validation rejects degenerate input") {
    CHECK_NOTHROW(validate(make(1, {{1, 0}, {0, 1}})));
    CHECK_THROWS_AS(validate(make(1, {{0, 0}})), std::invalid_argument);
    // proportional pair: the divisor would be non-reduced
    CHECK_THROWS_AS(validate(make(1, {{1, 2}, {2, 4}})), std::invalid_argument);
    // wrong coefficient length
    CHECK_THROWS_AS(validate(make(2, {{1, 0}})), std::invalid_argument);
}

TEST_CASE("two points in P^1") {
    Arrangement A = make(1, {{1, 0}, {0, 1}});
    IntersectionLattice L = build_lattice(A);
    CHECK(L.flats.size() == 4);  // bottom, two points, origin
    CharPoly chi = characteristic_polynomial(A);
    CHECK(chi.coeffs == std::vector<long long>{1, -2, 1});
    // complement of two points in P^1: chi = 0, class [P^1]
    CHECK(csm_complement(A) == ChowClass(1, {1, 0}));
    CHECK(euler_characteristic_complement(A) == 0);
}

TEST_CASE("boolean arrangement xyz in P^2") {
    Arrangement A = make(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    IntersectionLattice L = build_lattice(A);
    CHECK(L.flats.size() == 8);
    CharPoly chi = characteristic_polynomial(A);
    // (t-1)^3
    CHECK(chi.coeffs == std::vector<long long>{1, -3, 3, -1});
    CHECK(csm_complement(A) == ChowClass(2, {1, 0, 0}));
    CHECK(euler_characteristic_complement(A) == 0);
}

TEST_CASE("braid arrangement in P^2") {
    Arrangement A = braid_p2();
    IntersectionLattice L = build_lattice(A);
    CHECK(L.flats.size() == 15);  // 1 + 6 + 7 + 1
    int triple = 0, simple = 0;
    for (size_t i = 0; i < L.flats.size(); ++i) {
        if (L.flats[i].rank != 2) continue;
        if (L.flats[i].closed.size() == 3) ++triple;
        if (L.flats[i].closed.size() == 2) ++simple;
    }
    CHECK(triple == 4);
    CHECK(simple == 3);
    CharPoly chi = characteristic_polynomial(A);
    CHECK(chi.coeffs == std::vector<long long>{1, -6, 11, -6});
    CHECK(chi.eval(1) == 0);
    CHECK(chi.eval(2) == 0);
    CHECK(chi.eval(3) == 0);
    CHECK(csm_complement(A) == ChowClass(2, {1, -3, 2}));
}

TEST_CASE("mobius sum rule") {
    for (const Arrangement& A : fixtures()) {
        IntersectionLattice L = build_lattice(A);
        long long total = std::accumulate(L.mobius.begin(), L.mobius.end(), 0LL);
        CHECK(total == 0);
        CHECK(L.mobius[0] == 1);
    }
}

TEST_CASE("characteristic polynomial vanishes at 1") {
    for (const Arrangement& A : fixtures())
        CHECK(characteristic_polynomial(A).eval(1) == 0);
}

TEST_CASE("euler characteristic matches the point coefficient") {
    for (const Arrangement& A : fixtures()) {
        ChowClass c = csm_complement(A);
        CHECK(c.coeffs[A.n] == euler_characteristic_complement(A));
    }
}

TEST_CASE("deletion of a line") {
    // complement(xy) minus complement(xyz) is the line z=0 without its two
    // intersection points, so the difference of classes is [P^1] + 0 [P^0]
    Arrangement two = make(2, {{1, 0, 0}, {0, 1, 0}});
    Arrangement three = make(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(csm_complement(two) - csm_complement(three) == ChowClass(2, {0, 1, 0}));
}

TEST_CASE("defining polynomial") {
    Arrangement A = make(1, {{1, 0}, {0, 1}});
    Polynomial q = defining_polynomial(A);
    CHECK(q.degree() == 2);
    CHECK(q == Polynomial::term({1, 1}, Rational(1)));
}

TEST_CASE("row reduction") {
    std::vector<std::vector<Rational>> rows = {
        {Rational(2), Rational(4)}, {Rational(1), Rational(2)}, {Rational(0), Rational(3)}};
    CHECK(row_reduce(rows) == 2);
    CHECK(rows.size() == 2);
    CHECK(rows[0] == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(rows[1] == std::vector<Rational>{Rational(0), Rational(1)});
}
