#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcsm/chow.hpp"
#include "logcsm/polynomial.hpp"
#include "logcsm/rational.hpp"

namespace logcsm {

// Central hyperplane arrangement: the projectivization lives in P^n, the
// arrangement itself in an (n+1)-dimensional vector space. Hyperplanes are
// pairwise non-proportional and nonzero (the divisor is reduced).
struct Arrangement {
    int n = 0;
    std::vector<std::vector<Rational>> hyperplanes;  // coefficient vectors, length n+1
};

void validate(const Arrangement& A);

struct Flat {
    std::vector<int> closed;                     // sorted indices of hyperplanes containing it
    int rank = 0;                                // codimension in the vector space
    std::vector<std::vector<Rational>> basis;    // row-reduced basis of the defining equations
};

// Flats graded by rank, bottom element (whole space) first; mobius[i] is
// mu(bottom, flats[i]).
struct IntersectionLattice {
    std::vector<Flat> flats;
    std::vector<long long> mobius;

    // Order: x <= y iff closed(x) is a subset of closed(y).
    bool leq(size_t x, size_t y) const;
};

IntersectionLattice build_lattice(const Arrangement& A);

// chi(t) = sum_x mu(bottom, x) t^{dim x}; coefficients in t-descending
// order, degree n+1.
struct CharPoly {
    std::vector<long long> coeffs;  // coeffs[i] multiplies t^{deg - i}
    int degree() const { return (int)coeffs.size() - 1; }
    std::string to_string() const;
    long long eval(long long t) const;
};

CharPoly characteristic_polynomial(const Arrangement& A);

// c_SM of the complement P^n minus the arrangement, via Moebius-weighted
// sums of pushed-forward tangent classes of the flats' projectivizations.
ChowClass csm_complement(const Arrangement& A);

long long euler_characteristic_complement(const Arrangement& A);

// Product of the defining linear forms, in n+1 variables.
Polynomial defining_polynomial(const Arrangement& A);

// Exact rational row reduction; returns the rank, leaves rows in reduced
// echelon form with zero rows dropped.
int row_reduce(std::vector<std::vector<Rational>>& rows);

}  // namespace logcsm
