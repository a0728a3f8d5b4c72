#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace logcsm {

// Class in the truncated ring Z[h]/(h^{n+1}); coeffs[k] is the coefficient
// of h^k, i.e. of [P^{n-k}].
struct ChowClass {
    int n = 0;
    std::vector<long long> coeffs;  // length n+1

    explicit ChowClass(int n) : n(n), coeffs(n + 1, 0) {}
    ChowClass(int n, std::vector<long long> c);

    static ChowClass one(int n);
    static ChowClass hyperplane_power(int n, int k);

    bool is_zero() const;
    bool operator==(const ChowClass& o) const { return n == o.n && coeffs == o.coeffs; }
    bool operator!=(const ChowClass& o) const { return !(*this == o); }

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator*(const ChowClass& o) const;  // truncated
    ChowClass operator*(long long s) const;

    // Rendered as e.g. "1 - 3h + 2h^2".
    std::string to_string() const;
};

// Truncated product of total Chern classes (Whitney sum formula).
ChowClass whitney_product(const std::vector<ChowClass>& classes);

// Multiplicative inverse of a total Chern class with constant term 1.
ChowClass segre_of_bundle(const ChowClass& c);

// Sign involution indexed by dimension: the i-dimensional component (the
// h^{n-i} coefficient) picks up (-1)^i.
ChowClass dual_class(const ChowClass& g);

// Pushforward to P^n of c(TP^d) cap [P^d]: sum_k C(d+1,k) [P^{d-k}].
ChowClass csm_projective_subspace(int d, int n);

long long binomial(int n, int k);

}  // namespace logcsm
