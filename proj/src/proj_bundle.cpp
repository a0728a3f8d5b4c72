#include "logcsm/proj_bundle.hpp"

#include <sstream>
#include <stdexcept>

namespace logcsm {

int GradedRing::weighted_degree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < nsyms(); ++i) d += m[i] * weights[i];
    return d;
}

RingElem ring_zero(const GradedRing&) { return RingElem{}; }

RingElem ring_const(const GradedRing& R, long long c) {
    RingElem e;
    if (c != 0) e.terms[Monomial(R.nsyms(), 0)] = c;
    return e;
}

RingElem ring_one(const GradedRing& R) { return ring_const(R, 1); }

RingElem ring_gen(const GradedRing& R, int i) {
    if (i < 0 || i >= R.nsyms()) throw std::out_of_range("ring generator index");
    RingElem e;
    if (R.weights[i] <= R.trunc) {
        Monomial m(R.nsyms(), 0);
        m[i] = 1;
        e.terms[m] = 1;
    }
    return e;
}

static void add_into(std::map<Monomial, long long>& dst, const Monomial& m, long long c) {
    if (c == 0) return;
    auto [it, inserted] = dst.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) dst.erase(it);
    }
}

RingElem ring_add(const GradedRing&, const RingElem& a, const RingElem& b) {
    RingElem r = a;
    for (auto& [m, c] : b.terms) add_into(r.terms, m, c);
    return r;
}

RingElem ring_sub(const GradedRing&, const RingElem& a, const RingElem& b) {
    RingElem r = a;
    for (auto& [m, c] : b.terms) add_into(r.terms, m, -c);
    return r;
}

RingElem ring_mul(const GradedRing& R, const RingElem& a, const RingElem& b) {
    RingElem r;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            Monomial m = mono_mul(ma, mb);
            if (R.weighted_degree(m) > R.trunc) continue;
            add_into(r.terms, m, ca * cb);
        }
    return r;
}

RingElem ring_scale(const GradedRing&, const RingElem& a, long long s) {
    RingElem r;
    if (s == 0) return r;
    for (auto& [m, c] : a.terms) r.terms[m] = c * s;
    return r;
}

RingElem ring_graded_part(const GradedRing& R, const RingElem& a, int d) {
    RingElem r;
    for (auto& [m, c] : a.terms)
        if (R.weighted_degree(m) == d) r.terms[m] = c;
    return r;
}

std::string ring_to_string(const GradedRing& R, const RingElem& a) {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : a.terms) {
        long long v = c;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        bool has_syms = total_degree(m) > 0;
        if (!has_syms || v != 1) os << v;
        bool star = !has_syms || v != 1;
        for (int i = 0; i < R.nsyms(); ++i) {
            if (m[i] == 0) continue;
            if (star) os << "*";
            os << R.names[i];
            if (m[i] > 1) os << "^" << m[i];
            star = true;
        }
    }
    return os.str();
}

BundleModel formal_bundle(const GradedRing& R, int rank, int first_sym) {
    BundleModel b;
    b.rank = rank;
    for (int i = 0; i < rank; ++i) b.chern.push_back(ring_gen(R, first_sym + i));
    return b;
}

RingElem total_chern(const GradedRing& R, const BundleModel& E) {
    RingElem c = ring_one(R);
    for (auto& ci : E.chern) c = ring_add(R, c, ci);
    return c;
}

std::vector<RingElem> segre_classes(const GradedRing& R, const BundleModel& E, int upto) {
    std::vector<RingElem> s(upto + 1, ring_zero(R));
    s[0] = ring_one(R);
    for (int k = 1; k <= upto; ++k) {
        RingElem acc = ring_zero(R);
        for (int i = 1; i <= std::min(k, E.rank); ++i)
            acc = ring_add(R, acc, ring_mul(R, E.chern[i - 1], s[k - i]));
        s[k] = ring_sub(R, ring_zero(R), acc);
    }
    return s;
}

ProjBundleClass canonicalize(const GradedRing& R, const ProjBundleClass& a,
                             const BundleModel& E) {
    ProjBundleClass r = a;
    int rank = E.rank;
    if (rank <= 0) throw std::invalid_argument("bundle rank must be positive");
    for (int k = (int)r.h_coeffs.size() - 1; k >= rank; --k) {
        RingElem lead = r.h_coeffs[k];
        if (lead.is_zero()) continue;
        r.h_coeffs[k] = ring_zero(R);
        // H^k = H^{k-rank} * ( -sum c_i H^{rank-i} )
        for (int i = 1; i <= rank; ++i) {
            RingElem add = ring_scale(R, ring_mul(R, E.chern[i - 1], lead), -1);
            r.h_coeffs[k - i] = ring_add(R, r.h_coeffs[k - i], add);
        }
    }
    r.h_coeffs.resize(rank, ring_zero(R));
    return r;
}

RingElem pb_pushforward(const GradedRing& R, const ProjBundleClass& a, const BundleModel& E) {
    int max_s = (int)a.h_coeffs.size() - E.rank + 1;
    if (max_s < 1) return ring_zero(R);
    std::vector<RingElem> s = segre_classes(R, E, std::max(0, max_s - 1));
    RingElem out = ring_zero(R);
    for (int k = 0; k < (int)a.h_coeffs.size(); ++k) {
        int j = k - E.rank + 1;
        if (j < 0) continue;
        out = ring_add(R, out, ring_mul(R, a.h_coeffs[k], s[j]));
    }
    return out;
}

ProjBundleClass top_chern_twist(const GradedRing& R, const BundleModel& F, int n) {
    if (F.rank != n) throw std::invalid_argument("twist requires rank(F) = n");
    ProjBundleClass r;
    r.h_coeffs.assign(n + 1, ring_zero(R));
    r.h_coeffs[n] = ring_one(R);  // j = 0
    for (int j = 1; j <= n; ++j) r.h_coeffs[n - j] = F.chern[j - 1];
    return r;
}

RingElem shadow(const GradedRing& R, const ProjBundleClass& a, const BundleModel& E) {
    RingElem cE = total_chern(R, E);
    // Multiply by c(r*E) and by (1-H)^{-1} = sum H^i, then push. H-powers
    // beyond rank-1+trunc push to vanishing Segre classes.
    int len = (int)a.h_coeffs.size() + E.rank + R.trunc;
    ProjBundleClass b;
    b.h_coeffs.assign(len, ring_zero(R));
    RingElem partial = ring_zero(R);
    // prefix sums realize multiplication by the geometric series
    std::vector<RingElem> scaled;
    for (auto& hk : a.h_coeffs) scaled.push_back(ring_mul(R, cE, hk));
    for (int k = 0; k < len; ++k) {
        if (k < (int)scaled.size()) partial = ring_add(R, partial, scaled[k]);
        b.h_coeffs[k] = partial;
    }
    return pb_pushforward(R, b, E);
}

ProofChainResult proof_chain_check(int n) {
    if (n < 1) throw std::out_of_range("rank bound must be at least 1");
    GradedRing R;
    for (int i = 1; i <= n; ++i) {
        R.names.push_back("e" + std::to_string(i));
        R.weights.push_back(i);
    }
    for (int i = 1; i <= n; ++i) {
        R.names.push_back("f" + std::to_string(i));
        R.weights.push_back(i);
    }
    R.trunc = n;

    BundleModel E = formal_bundle(R, n, 0);
    BundleModel F = formal_bundle(R, n, n);
    std::vector<RingElem> sE = segre_classes(R, E, 2 * n + 1);
    RingElem cF = total_chern(R, F);

    ProofChainResult res;
    auto push_step = [&](const std::string& label, const std::string& rendered, bool ok) {
        res.steps.push_back({label, rendered, ok});
        return ok;
    };

    // Step 1: inverse of c(O(-1)) = 1 - H as a geometric series in H.
    int N = 2 * n;  // H^k pushes to s_{k-n+1}, zero past k = 2n
    push_step("geometric-series", "(1 - H)^{-1} = 1 + H + H^2 + ... (truncated at H^" +
                                      std::to_string(N) + ")",
              true);

    // Step 2: substitute the blow-up class by the top Chern class of the
    // twisted pullback bundle.
    ProjBundleClass twist = top_chern_twist(R, F, n);
    push_step("blowup-class-substitution",
              "[blow-up] = c_n(r*F (x) O(1)) cap [P(E)]", true);

    // Step 3: expand the twist: sum_j c_j(F) H^{n-j}.
    {
        std::ostringstream os;
        os << "c_n(r*F (x) O(1)) = ";
        for (int j = 0; j <= n; ++j) {
            if (j) os << " + ";
            os << ring_to_string(R, twist.h_coeffs[n - j]) << "*H^" << (n - j);
        }
        push_step("twist-expansion", os.str(), true);
    }

    // Step 4+5: projection formula and the Segre pushforward rule, computed
    // along two routes: Segre rule on the raw representation, and reduction
    // to canonical form first.
    ProjBundleClass series;
    series.h_coeffs.assign(N + n + 1, ring_zero(R));
    RingElem partial = ring_zero(R);
    for (int k = 0; k <= N + n; ++k) {
        if (k <= n) partial = ring_add(R, partial, twist.h_coeffs[k]);
        series.h_coeffs[k] = partial;
    }
    RingElem pushed_raw = pb_pushforward(R, series, E);
    RingElem pushed_canonical = pb_pushforward(R, canonicalize(R, series, E), E);
    bool ok45 = pushed_raw == pushed_canonical;
    push_step("projection-formula", "pull Chern classes of F out of the pushforward", ok45);
    RingElem lhs = ring_scale(R, pushed_raw, -1);
    push_step("segre-pushforward", "-" + ring_to_string(R, pushed_raw), ok45);

    // Step 6: reindex as a double sum over j + k = i + 1.
    RingElem reindexed = ring_zero(R);
    for (int j = 0; j <= n; ++j) {
        RingElem cj = (j == 0) ? ring_one(R) : F.chern[j - 1];
        for (int k = 0; k <= 2 * n + 1; ++k) {
            if (j + k < 1) continue;
            reindexed = ring_add(R, reindexed, ring_mul(R, cj, sE[k]));
        }
    }
    reindexed = ring_scale(R, reindexed, -1);
    bool ok6 = reindexed == lhs;
    push_step("diagonal-reindex", ring_to_string(R, reindexed), ok6);

    // Step 7: telescope to -(c(F) s(E) - 1).
    RingElem sE_total = ring_zero(R);
    for (int k = 0; k <= n; ++k) sE_total = ring_add(R, sE_total, sE[k]);
    RingElem prod = ring_mul(R, cF, sE_total);
    RingElem tele = ring_scale(R, ring_sub(R, prod, ring_one(R)), -1);
    bool ok7 = tele == lhs;
    push_step("telescope", "-(c(F)*s(E) - 1)", ok7);

    // Step 8: final form [X] - c(F) s(E) cap [X].
    RingElem rhs = ring_sub(R, ring_one(R), prod);
    bool ok8 = rhs == lhs;
    push_step("final-form", "1 - c(F)*s(E) = " + ring_to_string(R, rhs), ok8);

    res.ok = true;
    for (auto& s : res.steps) res.ok = res.ok && s.ok;
    return res;
}

}  // namespace logcsm
