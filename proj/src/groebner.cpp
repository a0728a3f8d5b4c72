#include "logcsm/groebner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <limits>
#include <set>

namespace logcsm {

namespace {

void check_nonzero(const std::vector<Polynomial>& gens) {
    for (auto& g : gens)
        if (g.is_zero()) throw std::invalid_argument("zero generator");
}

struct Budget {
    long remaining;
    void spend() {
        if (--remaining < 0) throw ResourceLimitError("Groebner step cap exceeded");
    }
};

// Workspace keyed by the active monomial order, so the leading term is the
// last map entry instead of a full scan.
struct OrdLess {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
};
using Workspace = std::map<Monomial, Rational, OrdLess>;

Workspace load(const Polynomial& p, const MonomialOrder& ord) {
    Workspace w(OrdLess{&ord});
    for (auto& [m, c] : p.terms()) w.emplace(m, c);
    return w;
}

void axpy(Workspace& w, const Monomial& shift, const Rational& scale, const Polynomial& p) {
    for (auto& [m, c] : p.terms()) {
        Monomial key = mono_mul(shift, m);
        auto it = w.find(key);
        if (it == w.end()) {
            w.emplace(std::move(key), scale * c);
        } else {
            it->second += scale * c;
            if (it->second == 0) w.erase(it);
        }
    }
}

// Division of p by divisors, optionally tracking cofactors of p and of each
// divisor with respect to a fixed original generator list.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& ord, Budget& budget,
                       std::vector<Polynomial>* quotients = nullptr,
                       const std::vector<std::pair<Monomial, Rational>>* leads = nullptr) {
    int nv = p.nvars();
    if (quotients) quotients->assign(divisors.size(), Polynomial::zero(nv));
    std::vector<std::pair<Monomial, Rational>> lead_local;
    if (!leads) {
        lead_local.reserve(divisors.size());
        for (auto& d : divisors) lead_local.push_back(d.leading_term(ord));
    }
    const auto& lead = leads ? *leads : lead_local;
    Polynomial rem(nv);
    Workspace work = load(p, ord);
    while (!work.empty()) {
        auto top = std::prev(work.end());
        const Monomial& lm = top->first;
        bool divided = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (!divides(lead[i].first, lm)) continue;
            budget.spend();
            Rational q = top->second / lead[i].second;
            Monomial shift = mono_div(lm, lead[i].first);
            if (quotients) (*quotients)[i].add_term(shift, q);
            axpy(work, shift, -q, divisors[i]);
            divided = true;
            break;
        }
        if (!divided) {
            rem.add_term(lm, top->second);
            work.erase(top);
        }
    }
    return rem;
}

struct Tracked {
    Polynomial p;
    std::vector<Polynomial> cof;  // p = sum cof[i] * f[i]
};

struct Pair {
    size_t i, j;
    Monomial lcm;
    int deg;
};

// Core Buchberger loop. When `track` is non-null, cofactors relative to the
// input list are carried through every operation and the cofactor rows of
// S-polynomials that reduce to zero (which are then syzygies of the input)
// are collected; in that mode no pair-skipping criteria are applied, per
// Schreyer's theorem.
std::vector<Polynomial> buchberger_core(const std::vector<Polynomial>& input,
                                        const MonomialOrder& ord, Budget& budget,
                                        std::vector<std::vector<Polynomial>>* cofactors,
                                        std::vector<std::vector<Polynomial>>* zero_syzygies) {
    bool track = cofactors != nullptr;
    int nv = input.empty() ? 0 : input[0].nvars();
    std::vector<Tracked> basis;
    for (size_t i = 0; i < input.size(); ++i) {
        Tracked t{input[i], {}};
        if (track) {
            t.cof.assign(input.size(), Polynomial::zero(nv));
            t.cof[i] = Polynomial::constant(nv, Rational(1));
        }
        Rational lc = t.p.leading_term(ord).second;
        t.p = t.p * (Rational(1) / lc);
        if (track)
            for (auto& c : t.cof) c = c * (Rational(1) / lc);
        basis.push_back(std::move(t));
    }

    std::vector<std::pair<Monomial, Rational>> leads;
    std::vector<Polynomial> current;
    for (auto& b : basis) {
        leads.push_back(b.p.leading_term(ord));
        current.push_back(b.p);
    }

    auto make_pair = [&](size_t i, size_t j) {
        Monomial lcm = mono_lcm(leads[i].first, leads[j].first);
        return Pair{i, j, lcm, total_degree(lcm)};
    };

    std::deque<Pair> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back(make_pair(i, j));
    std::set<std::pair<size_t, size_t>> done;

    while (!pairs.empty()) {
        // Normal strategy: minimal lcm degree, ties by queue age (the reduced
        // basis is unique, so the selection policy only affects speed).
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
            if (it->deg < best->deg) best = it;
        Pair pr = *best;
        pairs.erase(best);
        done.insert({pr.i, pr.j});

        const Monomial& lmi = leads[pr.i].first;
        const Monomial& lmj = leads[pr.j].first;
        if (!track) {
            if (mono_coprime(lmi, lmj)) continue;  // Buchberger's first criterion
            bool chain = false;                    // Gebauer-Moeller chain criterion
            for (size_t k = 0; k < basis.size() && !chain; ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (!divides(leads[k].first, pr.lcm)) continue;
                auto key1 = std::minmax(pr.i, k);
                auto key2 = std::minmax(pr.j, k);
                if (done.count({key1.first, key1.second}) &&
                    done.count({key2.first, key2.second}))
                    chain = true;
            }
            if (chain) continue;
        }

        budget.spend();
        Polynomial mi = Polynomial::term(mono_div(pr.lcm, lmi), Rational(1));
        Polynomial mj = Polynomial::term(mono_div(pr.lcm, lmj), Rational(1));
        Tracked s{mi * basis[pr.i].p - mj * basis[pr.j].p, {}};
        if (track) {
            s.cof.assign(input.size(), Polynomial::zero(nv));
            for (size_t k = 0; k < input.size(); ++k)
                s.cof[k] = mi * basis[pr.i].cof[k] - mj * basis[pr.j].cof[k];
        }

        std::vector<Polynomial> quot;
        Polynomial rem = reduce_full(s.p, current, ord, budget, track ? &quot : nullptr, &leads);
        if (track)
            for (size_t k = 0; k < input.size(); ++k)
                for (size_t b = 0; b < basis.size(); ++b)
                    s.cof[k] = s.cof[k] - quot[b] * basis[b].cof[k];

        if (rem.is_zero()) {
            if (zero_syzygies) {
                bool nonzero = false;
                for (auto& c : s.cof)
                    if (!c.is_zero()) nonzero = true;
                if (nonzero) zero_syzygies->push_back(s.cof);
            }
            continue;
        }
        Rational lc = rem.leading_term(ord).second;
        Tracked fresh{rem * (Rational(1) / lc), {}};
        if (track) {
            fresh.cof = std::move(s.cof);
            for (auto& c : fresh.cof) c = c * (Rational(1) / lc);
        }
        basis.push_back(std::move(fresh));
        leads.push_back(basis.back().p.leading_term(ord));
        current.push_back(basis.back().p);
        if (!track) {
            // Gebauer-Moeller update: the new leading monomial supersedes
            // queued pairs whose lcm it strictly divides.
            const Monomial& lt = leads.back().first;
            for (auto it = pairs.begin(); it != pairs.end();) {
                if (divides(lt, it->lcm) &&
                    mono_lcm(lt, leads[it->i].first) != it->lcm &&
                    mono_lcm(lt, leads[it->j].first) != it->lcm)
                    it = pairs.erase(it);
                else
                    ++it;
            }
        }
        for (size_t k = 0; k + 1 < basis.size(); ++k)
            pairs.push_back(make_pair(k, basis.size() - 1));
    }

    std::vector<Polynomial> out;
    for (auto& b : basis) out.push_back(b.p);
    if (cofactors) {
        cofactors->clear();
        for (auto& b : basis) cofactors->push_back(b.cof);
    }
    return out;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const MonomialOrder& ord,
                                     Budget& budget) {
    // Minimalize: drop elements whose leading monomial is divisible by
    // another element's.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        Monomial lmi = g[i].leading_monomial(ord);
        bool redundant = false;
        for (size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial lmj = g[j].leading_monomial(ord);
            if (divides(lmj, lmi) && (lmj != lmi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // Tail-reduce and make monic.
    std::vector<std::pair<Monomial, Rational>> leads;
    for (auto& p : minimal) leads.push_back(p.leading_term(ord));
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        Polynomial rem(minimal[i].nvars());
        Workspace work = load(minimal[i], ord);
        while (!work.empty()) {
            auto top = std::prev(work.end());
            bool divided = false;
            for (size_t j = 0; j < minimal.size(); ++j) {
                if (j == i || !divides(leads[j].first, top->first)) continue;
                budget.spend();
                Rational q = top->second / leads[j].second;
                axpy(work, mono_div(top->first, leads[j].first), -q, minimal[j]);
                divided = true;
                break;
            }
            if (!divided) {
                rem.add_term(top->first, top->second);
                work.erase(top);
            }
        }
        reduced.push_back(rem * (Rational(1) / rem.leading_term(ord).second));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return reduced;
}

}  // namespace

DivisionResult divide_reduce(const Polynomial& p, const std::vector<Polynomial>& divisors,
                             const MonomialOrder& ord) {
    check_nonzero(divisors);
    Budget budget{std::numeric_limits<long>::max()};
    DivisionResult r{std::vector<Polynomial>(), Polynomial::zero(p.nvars())};
    r.remainder = reduce_full(p, divisors, ord, budget, &r.quotients);
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero");
    auto [fm, fc] = f.leading_term(ord);
    auto [gm, gc] = g.leading_term(ord);
    Monomial lcm = mono_lcm(fm, gm);
    Polynomial mf = Polynomial::term(mono_div(lcm, fm), Rational(1) / fc);
    Polynomial mg = Polynomial::term(mono_div(lcm, gm), Rational(1) / gc);
    return mf * f - mg * g;
}

GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& opts) {
    check_nonzero(I.generators);
    if (I.generators.empty()) throw std::invalid_argument("empty generating set");
    Budget budget{opts.step_cap};
    auto g = buchberger_core(I.generators, I.ord, budget, nullptr, nullptr);
    return GroebnerBasis{reduce_basis(std::move(g), I.ord, budget), I.ord, true};
}

bool ideal_membership(const Polynomial& p, const Ideal& I, const GroebnerOptions& opts) {
    if (p.is_zero()) return true;
    GroebnerBasis gb = buchberger(I, opts);
    Budget budget{opts.step_cap};
    return reduce_full(p, gb.elements, I.ord, budget).is_zero();
}

bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
    if (a.generators.empty() || b.generators.empty()) {
        auto trivial = [](const Ideal& i) {
            for (auto& g : i.generators)
                if (!g.is_zero()) return false;
            return true;
        };
        return trivial(a) == trivial(b);
    }
    return buchberger(a, opts).elements == buchberger(b, opts).elements;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars,
                const GroebnerOptions& opts) {
    check_nonzero(I.generators);
    if (I.generators.empty()) return Ideal{{}, MonomialOrder::grevlex()};
    int nv = I.generators[0].nvars();
    std::vector<bool> dropped(nv, false);
    for (int v : drop_vars) {
        if (v < 0 || v >= nv) throw std::out_of_range("drop variable out of range");
        dropped[v] = true;
    }
    int d = 0;
    for (int i = 0; i < nv; ++i)
        if (dropped[i]) ++d;

    // Dropped variables move to the leading block.
    std::vector<int> perm(nv);
    int front = 0, back = d;
    for (int i = 0; i < nv; ++i) perm[i] = dropped[i] ? front++ : back++;

    Ideal permuted;
    permuted.ord = MonomialOrder::block(d);
    for (auto& g : I.generators) permuted.generators.push_back(g.remap_variables(perm, nv));
    GroebnerBasis gb = buchberger(permuted, opts);

    std::vector<int> down(nv, -1);
    int idx = 0;
    for (int i = 0; i < nv; ++i)
        if (i >= d) down[i] = idx++;
    Ideal out;
    out.ord = MonomialOrder::grevlex();
    for (auto& g : gb.elements) {
        bool pure = true;
        for (int v : g.support_variables())
            if (v < d) { pure = false; break; }
        if (pure) out.generators.push_back(g.remap_variables(down, nv - d));
    }
    return out;
}

SyzygyModule syzygies(const std::vector<Polynomial>& f, const GroebnerOptions& opts) {
    check_nonzero(f);
    if (f.empty()) throw std::invalid_argument("empty generator list");
    int nv = f[0].nvars();
    Budget budget{opts.step_cap};
    std::vector<std::vector<Polynomial>> cof, zero_syz;
    auto g = buchberger_core(f, MonomialOrder::grevlex(), budget, &cof, &zero_syz);

    SyzygyModule mod;
    mod.relations = std::move(zero_syz);

    // Redundancy syzygies: f_i minus its expression through the basis.
    MonomialOrder ord = MonomialOrder::grevlex();
    for (size_t i = 0; i < f.size(); ++i) {
        std::vector<Polynomial> quot;
        Polynomial rem = reduce_full(f[i], g, ord, budget, &quot);
        if (!rem.is_zero()) throw std::logic_error("generator fails to reduce by own basis");
        std::vector<Polynomial> rel(f.size(), Polynomial::zero(nv));
        rel[i] = Polynomial::constant(nv, Rational(1));
        for (size_t b = 0; b < g.size(); ++b)
            for (size_t k = 0; k < f.size(); ++k) rel[k] = rel[k] - quot[b] * cof[b][k];
        bool nonzero = false;
        for (auto& c : rel)
            if (!c.is_zero()) nonzero = true;
        if (nonzero) mod.relations.push_back(std::move(rel));
    }

    // Exact re-verification of every relation.
    for (auto& rel : mod.relations) {
        Polynomial acc(nv);
        for (size_t k = 0; k < f.size(); ++k) acc = acc + rel[k] * f[k];
        if (!acc.is_zero()) throw std::logic_error("syzygy verification failed");
    }
    return mod;
}

Ideal jacobian_ideal(const Polynomial& h) {
    if (h.is_constant()) throw std::invalid_argument("jacobian ideal of a constant");
    Ideal I;
    I.generators.push_back(h);
    for (int i = 0; i < h.nvars(); ++i) {
        Polynomial d = h.derivative(i);
        if (!d.is_zero()) I.generators.push_back(d);
    }
    return I;
}

MonomialOrder presentation_order() { return MonomialOrder::grevlex(); }

PresentationIdeal sym_ideal(const std::vector<Polynomial>& f, const GroebnerOptions& opts) {
    check_nonzero(f);
    int m = f.empty() ? 0 : f[0].nvars();
    int k = (int)f.size();
    PresentationIdeal out{m, k, {}};
    SyzygyModule syz = syzygies(f, opts);
    std::vector<int> up(m);
    for (int i = 0; i < m; ++i) up[i] = i;
    for (auto& rel : syz.relations) {
        Polynomial form(m + k);
        for (int i = 0; i < k; ++i) {
            Polynomial ai = rel[i].remap_variables(up, m + k);
            form = form + ai * Polynomial::variable(m + k, m + i);
        }
        if (!form.is_zero()) out.generators.push_back(form);
    }
    return out;
}

PresentationIdeal rees_ideal(const std::vector<Polynomial>& f, const GroebnerOptions& opts) {
    check_nonzero(f);
    int m = f.empty() ? 0 : f[0].nvars();
    int k = (int)f.size();
    int nv = m + k + 1;  // x's, T's, t last
    std::vector<int> up(m);
    for (int i = 0; i < m; ++i) up[i] = i;
    Ideal graph;
    for (int i = 0; i < k; ++i) {
        Polynomial fi = f[i].remap_variables(up, nv);
        Polynomial gi = Polynomial::variable(nv, m + i) - Polynomial::variable(nv, nv - 1) * fi;
        graph.generators.push_back(gi);
    }
    Ideal elim = eliminate(graph, {nv - 1}, opts);
    return PresentationIdeal{m, k, elim.generators};
}

namespace {

// Krull dimension of the quotient by the leading-term ideal of a Groebner
// basis (equal to the dimension of the quotient by the ideal itself for
// graded orders): size of the largest variable subset meeting no leading
// monomial's support. -1 for the unit ideal.
int quotient_dimension(const std::vector<Polynomial>& gb, const MonomialOrder& ord) {
    int nv = gb.empty() ? 0 : gb[0].nvars();
    std::vector<Monomial> lts;
    for (auto& g : gb) {
        if (g.is_constant()) return -1;
        lts.push_back(g.leading_monomial(ord));
    }
    int best = -1;
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz <= best) continue;
        bool independent = true;
        for (auto& m : lts) {
            bool inside = true;
            for (int v = 0; v < nv; ++v)
                if (m[v] > 0 && !((mask >> v) & 1)) { inside = false; break; }
            if (inside) { independent = false; break; }
        }
        if (independent) best = sz;
    }
    return best;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& mat) {
    size_t n = mat.size();
    if (n == 1) return mat[0][0];
    int nv = mat[0][0].nvars();
    Polynomial acc(nv);
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Polynomial>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(mat[i][j]);
            sub.push_back(std::move(row));
        }
        Polynomial term = mat[0][c] * poly_det(sub);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Drop generators lying in the ideal of the others. Linear type is a
// property of the ideal, not of a chosen generating set, so the test may
// minimalize freely; a redundant generator (such as a polynomial next to
// the partials it is an Euler combination of) inflates the presentation
// ring for nothing.
std::vector<Polynomial> minimalize_generators(std::vector<Polynomial> gens,
                                              const GroebnerOptions& opts) {
    bool changed = true;
    while (changed && gens.size() > 1) {
        changed = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (ideal_membership(gens[i], Ideal{others, MonomialOrder::grevlex()}, opts)) {
                gens.erase(gens.begin() + i);
                changed = true;
                break;
            }
        }
    }
    return gens;
}

// Small generating subset of the Sym ideal, greedily by ascending degree,
// splitting each syzygy form into weighted-homogeneous components first
// when the base generators are homogeneous (T_i carrying deg f_i).
std::vector<Polynomial> minimal_sym_generators(const std::vector<Polynomial>& sym_gens,
                                               const std::vector<Polynomial>& f,
                                               const GroebnerOptions& opts) {
    int m = f[0].nvars();
    int k = (int)f.size();
    std::vector<int> weight(m + k, 1);
    bool homogeneous = true;
    for (int i = 0; i < k; ++i) {
        if (!f[i].is_homogeneous()) homogeneous = false;
        weight[m + i] = f[i].degree();
    }
    std::vector<Polynomial> cand;
    if (homogeneous) {
        for (auto& g : sym_gens) {
            std::map<int, Polynomial> parts;
            for (auto& [mono, c] : g.terms()) {
                int d = 0;
                for (int v = 0; v < m + k; ++v) d += weight[v] * mono[v];
                auto it = parts.find(d);
                if (it == parts.end()) it = parts.emplace(d, Polynomial::zero(m + k)).first;
                it->second.add_term(mono, c);
            }
            for (auto& [d, p] : parts) cand.push_back(std::move(p));
        }
        auto wdeg = [&](const Polynomial& p) {
            int d = 0;
            for (auto& [mono, c] : p.terms()) {
                int s = 0;
                for (int v = 0; v < m + k; ++v) s += weight[v] * mono[v];
                d = std::max(d, s);
            }
            return d;
        };
        std::stable_sort(cand.begin(), cand.end(),
                         [&](const Polynomial& a, const Polynomial& b) {
                             return wdeg(a) < wdeg(b);
                         });
    } else {
        cand = sym_gens;
    }
    std::vector<Polynomial> kept;
    for (auto& g : cand) {
        if (g.is_zero()) continue;
        if (!kept.empty() &&
            ideal_membership(g, Ideal{kept, presentation_order()}, opts))
            continue;
        kept.push_back(g);
    }
    return kept;
}

}  // namespace

// The Sym ideal L is generated by forms linear in the T's, with a syzygy
// coefficient matrix A over the base ring. When L is certified to be a
// complete intersection (codimension equal to the size of a generating
// set) it is unmixed, and then L equals its saturation, the Rees ideal,
// exactly when the incidence variety { A(x) T = 0 } has no component over
// a rank-degenerate locus of A. That turns the decision into dimension
// counts of minor ideals of A, all in the base ring, which stays cheap
// where the direct elimination blows up. Without the certificate, fall
// back to reducing the Rees generators modulo the Sym basis directly.
LinearTypeResult is_linear_type(const std::vector<Polynomial>& f, const GroebnerOptions& opts) {
    check_nonzero(f);
    std::vector<Polynomial> gens = minimalize_generators(f, opts);
    if (gens.size() <= 1) return {true, std::nullopt};
    int m = gens[0].nvars();
    int k = (int)gens.size();

    PresentationIdeal sym = sym_ideal(gens, opts);
    if (sym.generators.empty()) return {true, std::nullopt};
    GroebnerBasis gbL = buchberger(Ideal{sym.generators, presentation_order()}, opts);

    auto literal_route = [&]() -> LinearTypeResult {
        PresentationIdeal rees = rees_ideal(gens, opts);
        Budget budget{opts.step_cap};
        for (auto& g : rees.generators) {
            Polynomial rem = reduce_full(g, gbL.elements, presentation_order(), budget);
            if (!rem.is_zero()) return {false, g};
        }
        return {true, std::nullopt};
    };

    std::vector<Polynomial> kept = minimal_sym_generators(sym.generators, gens, opts);
    int dim_l = quotient_dimension(gbL.elements, presentation_order());
    int codim = (m + k) - dim_l;
    if ((int)kept.size() != codim || codim > k) return literal_route();

    // Syzygy matrix: kept[j] = sum_i A[j][i] T_i.
    int g_rows = (int)kept.size();
    std::vector<std::vector<Polynomial>> A(g_rows,
                                           std::vector<Polynomial>(k, Polynomial::zero(m)));
    for (int j = 0; j < g_rows; ++j) {
        for (auto& [mono, c] : kept[j].terms()) {
            int ti = -1;
            for (int v = m; v < m + k; ++v)
                if (mono[v] > 0) { ti = v - m; break; }
            if (ti < 0 || mono[ti + m] != 1) return literal_route();
            Monomial base(m);
            for (int v = 0; v < m; ++v) base[v] = mono[v];
            A[j][ti].add_term(base, c);
        }
    }

    bool linear_type = true;
    for (int r = g_rows - 1; r >= 0 && linear_type; --r) {
        std::vector<Polynomial> minors;
        std::vector<int> ri, ci;
        std::function<void(int, int)> pick_cols = [&](int start, int need) {
            if (!need) {
                std::vector<std::vector<Polynomial>> sub;
                for (int a : ri) {
                    std::vector<Polynomial> row;
                    for (int b : ci) row.push_back(A[a][b]);
                    sub.push_back(std::move(row));
                }
                Polynomial d = poly_det(sub);
                if (!d.is_zero()) minors.push_back(std::move(d));
                return;
            }
            for (int j = start; j < k; ++j) {
                ci.push_back(j);
                pick_cols(j + 1, need - 1);
                ci.pop_back();
            }
        };
        std::function<void(int, int)> pick_rows = [&](int start, int need) {
            if (!need) { pick_cols(0, r + 1); return; }
            for (int i = start; i < g_rows; ++i) {
                ri.push_back(i);
                pick_rows(i + 1, need - 1);
                ri.pop_back();
            }
        };
        pick_rows(0, r + 1);
        int dim_r;
        if (minors.empty()) {
            dim_r = m;  // identically degenerate; excluded by the certificate
        } else {
            GroebnerBasis gbM = buchberger(Ideal{minors, MonomialOrder::grevlex()}, opts);
            dim_r = quotient_dimension(gbM.elements, MonomialOrder::grevlex());
        }
        if (dim_r >= 0 && dim_r + k - r >= m + 1) linear_type = false;
    }
    if (linear_type) return {true, std::nullopt};

    // The verdict stands on its own; the elimination only furnishes the
    // witness, so a blown budget there downgrades to witness-free output.
    try {
        return literal_route();
    } catch (const ResourceLimitError&) {
        return {false, std::nullopt};
    }
}

}  // namespace logcsm
