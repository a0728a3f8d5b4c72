#pragma once

#include <map>
#include <string>
#include <vector>

#include "logcsm/chow.hpp"
#include "logcsm/monomial.hpp"

namespace logcsm {

// Commutative ring Z[g_1..g_k] with weighted generators, truncated above
// weighted degree `trunc` (classes below point dimension vanish). The
// concrete Chow ring of P^n is the single-generator case with weight 1.
struct GradedRing {
    std::vector<std::string> names;
    std::vector<int> weights;
    int trunc = 0;

    int nsyms() const { return (int)names.size(); }
    int weighted_degree(const Monomial& m) const;
};

struct RingElem {
    std::map<Monomial, long long> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const RingElem& o) const { return terms == o.terms; }
    bool operator!=(const RingElem& o) const { return !(*this == o); }
};

RingElem ring_zero(const GradedRing& R);
RingElem ring_one(const GradedRing& R);
RingElem ring_gen(const GradedRing& R, int i);
RingElem ring_const(const GradedRing& R, long long c);
RingElem ring_add(const GradedRing& R, const RingElem& a, const RingElem& b);
RingElem ring_sub(const GradedRing& R, const RingElem& a, const RingElem& b);
RingElem ring_mul(const GradedRing& R, const RingElem& a, const RingElem& b);
RingElem ring_scale(const GradedRing& R, const RingElem& a, long long s);
RingElem ring_graded_part(const GradedRing& R, const RingElem& a, int d);
std::string ring_to_string(const GradedRing& R, const RingElem& a);

// Rank-r bundle model given by its Chern classes c_1..c_r in the base
// ring; c_0 = 1 implicitly and c_i = 0 above the rank.
struct BundleModel {
    int rank = 0;
    std::vector<RingElem> chern;  // chern[i-1] = c_i
};

BundleModel formal_bundle(const GradedRing& R, int rank, int first_sym);
RingElem total_chern(const GradedRing& R, const BundleModel& E);

// s_0..s_upto with c(E) * s(E) = 1, computed gradewise.
std::vector<RingElem> segre_classes(const GradedRing& R, const BundleModel& E, int upto);

// Class in A_*(P(E)) given by its coefficients of powers of the hyperplane
// class H; h_coeffs[k] multiplies H^k. Canonical form has H-degree < rank
// after Grothendieck reduction.
struct ProjBundleClass {
    std::vector<RingElem> h_coeffs;
};

// Reduce via H^r = -sum_{i=1..r} c_i(E) H^{r-i} until H-degree < rank.
ProjBundleClass canonicalize(const GradedRing& R, const ProjBundleClass& a,
                             const BundleModel& E);

// Linear extension of H^k -> s_{k-rank+1}(E), s_j = 0 for j < 0. Agrees on
// reduced and unreduced representations.
RingElem pb_pushforward(const GradedRing& R, const ProjBundleClass& a, const BundleModel& E);

// c_rank(r*F tensor O(1)) = sum_j c_j(F) H^{rank-j}; requires rank(F) equal
// to the stated rank n.
ProjBundleClass top_chern_twist(const GradedRing& R, const BundleModel& F, int n);

// pushforward of c(zeta) cap alpha, with c(zeta) = c(r*E) * (1-H)^{-1}.
RingElem shadow(const GradedRing& R, const ProjBundleClass& a, const BundleModel& E);

struct ProofChainStep {
    std::string label;
    std::string rendered;
    bool ok = true;
};

struct ProofChainResult {
    bool ok = false;
    std::vector<ProofChainStep> steps;
};

// Over the formal base ring in Chern symbols e_1..e_n, f_1..f_n truncated
// at total (weighted) degree n, verifies
//   -push((1-H)^{-1} * c_n(r*F tensor O(1)))  ==  [X] - c(F) * s(E) cap [X]
// recording each intermediate normal form of the equality chain.
ProofChainResult proof_chain_check(int n);

}  // namespace logcsm
