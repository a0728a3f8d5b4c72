#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logcsm/arrangement.hpp"
#include "logcsm/chow.hpp"
#include "logcsm/polynomial.hpp"

namespace logcsm {

// theta = sum coeffs[i] * d/dx_i.
struct Derivation {
    std::vector<Polynomial> coeffs;

    int nvars() const { return (int)coeffs.size(); }
    bool operator==(const Derivation& o) const { return coeffs == o.coeffs; }
};

Polynomial apply_derivation(const Derivation& theta, const Polynomial& p);

// theta(h) lies in the principal ideal (h); decided by exact division.
bool is_logarithmic(const Derivation& theta, const Polynomial& h);

struct GradedDerivationSpace {
    int degree = 0;
    std::vector<Derivation> basis;
    int dimension() const { return (int)basis.size(); }
};

// Degree-d graded piece of the logarithmic derivation module of a
// homogeneous h, by exact linear algebra on theta(h) - q h = 0.
GradedDerivationSpace graded_log_derivations(const Polynomial& h, int d);

// All theta with coefficient total degree <= bound and theta(h) in (h),
// as a vector-space basis of that slice. Works for non-homogeneous h.
std::vector<Derivation> bounded_log_derivations(const Polynomial& h, int bound);

struct SaitoCertificate {
    std::vector<Derivation> basis;
    Polynomial determinant;
    Rational unit;  // determinant = unit * h, unit nonzero
    std::vector<int> exponents() const;  // coefficient degrees, sorted
};

enum class SaitoStatus { Free, NotProportional, NotLogarithmic, WrongCount };

struct SaitoResult {
    SaitoStatus status = SaitoStatus::NotProportional;
    std::optional<SaitoCertificate> certificate;
    std::optional<int> bad_index;      // offending derivation for NotLogarithmic
    std::optional<Polynomial> determinant;
};

// Determinant criterion: the m derivations are a free basis iff
// det(coefficient matrix) is a nonzero scalar times h.
SaitoResult saito_test(const Polynomial& h, const std::vector<Derivation>& basis);

enum class FreenessVerdict { Free, CertifiedNonFree, Inconclusive };

struct FreeBasisResult {
    FreenessVerdict verdict = FreenessVerdict::Inconclusive;
    std::optional<SaitoCertificate> certificate;
    std::vector<int> exponents;
    std::string detail;
};

// Squarefreeness over Q, decided by the codimension of the singular
// subscheme: h is reduced iff (h, dh) cuts out codimension >= 2.
bool is_squarefree(const Polynomial& h);

// Greedy echelon search across degrees, quotienting multiples of already
// chosen derivations, then Saito-tested. degree_bound < 0 means deg h.
// assume_reduced skips the squarefreeness check (used when the caller has
// already validated reducedness, e.g. for arrangements).
FreeBasisResult find_free_basis(const Polynomial& h, int degree_bound = -1,
                                bool assume_reduced = false);

struct TeraoVerdict {
    bool certified_non_free = false;
    std::vector<long long> integer_roots;  // full factorization when not certified
    std::string detail;
};

// Necessary condition: the characteristic polynomial of a free arrangement
// factors over the integers; a non-integer root certifies non-freeness.
TeraoVerdict terao_factorization_check(const Arrangement& A);

// find_free_basis on the defining polynomial, falling back to the
// factorization check for a certified-non-free verdict.
FreeBasisResult arrangement_freeness(const Arrangement& A);

// Total Chern class of the logarithmic derivation sheaf on P^n from the
// exponents of a free central arrangement: remove one exponent equal to 1
// (the Euler derivation) and take the product of (1 + (1-e) h). The empty
// multiset gives c(TP^n).
ChowClass chern_log_sheaf(const std::vector<int>& exponents, int n);

// Monomials of the given exact total degree, grevlex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace logcsm
