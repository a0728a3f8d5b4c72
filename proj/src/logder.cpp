#include "logcsm/logder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "logcsm/groebner.hpp"

namespace logcsm {

Polynomial apply_derivation(const Derivation& theta, const Polynomial& p) {
    if (theta.nvars() != p.nvars()) throw std::invalid_argument("variable count mismatch");
    Polynomial acc(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) acc = acc + theta.coeffs[i] * p.derivative(i);
    return acc;
}

bool is_logarithmic(const Derivation& theta, const Polynomial& h) {
    Polynomial v = apply_derivation(theta, h);
    if (v.is_zero()) return true;
    return divide_reduce(v, {h}, MonomialOrder::grevlex()).remainder.is_zero();
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial m(nvars, 0);
    // lexicographic enumeration, then sort grevlex-descending
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars - 1) {
            m[pos] = left;
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[pos] = e;
            rec(pos + 1, left - e);
        }
        m[pos] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back(m);
        return out;
    }
    rec(0, degree);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ord.less(b, a);
    });
    return out;
}

namespace {

std::vector<Monomial> monomials_up_to(int nvars, int degree) {
    std::vector<Monomial> out;
    for (int d = degree; d >= 0; --d) {
        auto md = monomials_of_degree(nvars, d);
        out.insert(out.end(), md.begin(), md.end());
    }
    return out;
}

// Nullspace basis of an exact rational matrix, via reduced row echelon
// form; free variables set to 1 in turn.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             size_t ncols) {
    size_t pivot_row = 0;
    std::vector<int> pivot_col_of_row;
    for (size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Rational inv = Rational(1) / rows[pivot_row][col];
        for (size_t c = col; c < ncols; ++c) rows[pivot_row][c] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[pivot_row][c];
        }
        pivot_col_of_row.push_back((int)col);
        ++pivot_row;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = -rows[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve theta(h) = q h over coefficient unknowns of the p_i drawn from
// p_monos and of q drawn from q_monos; equations are indexed by monomials
// of the products. Returns derivations built from the p-part.
std::vector<Derivation> solve_log_system(const Polynomial& h,
                                         const std::vector<Monomial>& p_monos,
                                         const std::vector<Monomial>& q_monos) {
    int m = h.nvars();
    size_t np = p_monos.size();
    size_t ncols = m * np + q_monos.size();
    if (ncols == 0) return {};

    std::vector<Polynomial> partials;
    for (int i = 0; i < m; ++i) partials.push_back(h.derivative(i));

    // Collect equation rows keyed by product monomial.
    std::map<Monomial, std::vector<Rational>> eq;
    auto row_of = [&](const Monomial& key) -> std::vector<Rational>& {
        auto it = eq.find(key);
        if (it == eq.end())
            it = eq.emplace(key, std::vector<Rational>(ncols, Rational(0))).first;
        return it->second;
    };
    for (int i = 0; i < m; ++i)
        for (size_t a = 0; a < np; ++a)
            for (auto& [mono, c] : partials[i].terms())
                row_of(mono_mul(p_monos[a], mono))[i * np + a] += c;
    for (size_t b = 0; b < q_monos.size(); ++b)
        for (auto& [mono, c] : h.terms())
            row_of(mono_mul(q_monos[b], mono))[m * np + b] -= c;

    std::vector<std::vector<Rational>> rows;
    for (auto& [key, r] : eq) rows.push_back(r);

    std::vector<Derivation> out;
    for (auto& v : nullspace(std::move(rows), ncols)) {
        Derivation theta;
        for (int i = 0; i < m; ++i) {
            Polynomial p(m);
            for (size_t a = 0; a < np; ++a) p.add_term(p_monos[a], v[i * np + a]);
            theta.coeffs.push_back(p);
        }
        bool zero = true;
        for (auto& p : theta.coeffs)
            if (!p.is_zero()) zero = false;
        if (zero) continue;  // pure-q solutions only arise for h = 0 pieces
        if (!is_logarithmic(theta, h))
            throw std::logic_error("solver produced a non-logarithmic derivation");
        out.push_back(std::move(theta));
    }
    return out;
}

}  // namespace

GradedDerivationSpace graded_log_derivations(const Polynomial& h, int d) {
    if (h.is_constant()) throw std::invalid_argument("h must be nonconstant");
    if (!h.is_homogeneous())
        throw std::invalid_argument("h not homogeneous; use bounded_log_derivations");
    if (d < 0) throw std::invalid_argument("negative degree");
    GradedDerivationSpace out;
    out.degree = d;
    out.basis = solve_log_system(h, monomials_of_degree(h.nvars(), d),
                                 monomials_of_degree(h.nvars(), d - 1));
    return out;
}

std::vector<Derivation> bounded_log_derivations(const Polynomial& h, int bound) {
    if (h.is_constant()) throw std::invalid_argument("h must be nonconstant");
    if (bound < 0) throw std::invalid_argument("negative bound");
    return solve_log_system(h, monomials_up_to(h.nvars(), bound),
                            monomials_up_to(h.nvars(), bound - 1));
}

namespace {

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& mat) {
    size_t m = mat.size();
    if (m == 0) throw std::invalid_argument("empty matrix");
    int nv = mat[0][0].nvars();
    if (m == 1) return mat[0][0];
    Polynomial acc(nv);
    for (size_t j = 0; j < m; ++j) {
        if (mat[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t r = 1; r < m; ++r) {
            std::vector<Polynomial> row;
            for (size_t c = 0; c < m; ++c)
                if (c != j) row.push_back(mat[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = mat[0][j] * poly_determinant(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

int derivation_degree(const Derivation& theta) {
    int d = -1;
    for (auto& p : theta.coeffs) d = std::max(d, p.degree());
    return d;
}

}  // namespace

std::vector<int> SaitoCertificate::exponents() const {
    std::vector<int> e;
    for (auto& theta : basis) e.push_back(derivation_degree(theta));
    std::sort(e.begin(), e.end());
    return e;
}

SaitoResult saito_test(const Polynomial& h, const std::vector<Derivation>& basis) {
    int m = h.nvars();
    SaitoResult res;
    if ((int)basis.size() != m) {
        res.status = SaitoStatus::WrongCount;
        return res;
    }
    for (int i = 0; i < m; ++i) {
        if (basis[i].nvars() != m) throw std::invalid_argument("variable count mismatch");
        if (!is_logarithmic(basis[i], h)) {
            res.status = SaitoStatus::NotLogarithmic;
            res.bad_index = i;
            return res;
        }
    }
    std::vector<std::vector<Polynomial>> mat;
    for (auto& theta : basis) mat.push_back(theta.coeffs);
    Polynomial det = poly_determinant(mat);
    res.determinant = det;
    if (det.is_zero()) {
        res.status = SaitoStatus::NotProportional;
        return res;
    }
    auto div = divide_reduce(det, {h}, MonomialOrder::grevlex());
    if (div.remainder.is_zero() && div.quotients[0].is_constant()) {
        Rational unit = div.quotients[0].coeff(Monomial(m, 0));
        res.status = SaitoStatus::Free;
        res.certificate = SaitoCertificate{basis, det, unit};
        return res;
    }
    res.status = SaitoStatus::NotProportional;
    return res;
}

namespace {

// Incremental echelon form over flat rational vectors.
struct Echelon {
    std::vector<std::vector<Rational>> rows;  // each normalized to pivot 1
    std::vector<size_t> pivots;

    // Reduces v in place; returns false when v lies in the span.
    bool reduce(std::vector<Rational>& v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            Rational f = v[pivots[r]];
            for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
        }
        for (auto& x : v)
            if (x != 0) return true;
        return false;
    }

    void insert(std::vector<Rational> v) {
        size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        Rational inv = Rational(1) / v[p];
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(p);
    }
};

std::vector<Rational> flatten(const Derivation& theta,
                              const std::vector<Monomial>& monos,
                              const std::map<Monomial, size_t>& index) {
    int m = theta.nvars();
    std::vector<Rational> v(m * monos.size(), Rational(0));
    for (int i = 0; i < m; ++i)
        for (auto& [mono, c] : theta.coeffs[i].terms()) {
            auto it = index.find(mono);
            if (it == index.end()) throw std::logic_error("monomial outside ambient slice");
            v[i * monos.size() + it->second] = c;
        }
    return v;
}

Derivation unflatten(const std::vector<Rational>& v, int m,
                     const std::vector<Monomial>& monos) {
    Derivation theta;
    for (int i = 0; i < m; ++i) {
        Polynomial p(m);
        for (size_t a = 0; a < monos.size(); ++a)
            p.add_term(monos[a], v[i * monos.size() + a]);
        theta.coeffs.push_back(p);
    }
    return theta;
}

Derivation mono_multiple(const Derivation& theta, const Monomial& mono) {
    Derivation out;
    Polynomial factor = Polynomial::term(mono, Rational(1));
    for (auto& p : theta.coeffs) out.coeffs.push_back(factor * p);
    return out;
}

}  // namespace

bool is_squarefree(const Polynomial& h) {
    if (h.is_constant()) return !h.is_zero();
    int m = h.nvars();
    GroebnerBasis gb = buchberger(jacobian_ideal(h));
    std::vector<Monomial> leads;
    for (auto& g : gb.elements) leads.push_back(g.leading_monomial(MonomialOrder::grevlex()));
    // Krull dimension of the leading-term ideal: largest variable subset S
    // such that no leading monomial is supported inside S.
    int dim = -1;  // -1: empty singular subscheme (unit ideal)
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= dim) continue;
        bool independent = true;
        for (auto& lm : leads) {
            bool inside = true;
            for (int i = 0; i < m && inside; ++i)
                if (lm[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) dim = size;
    }
    return dim <= m - 2;
}

FreeBasisResult find_free_basis(const Polynomial& h, int degree_bound, bool assume_reduced) {
    if (h.is_constant()) throw std::invalid_argument("h must be nonconstant");
    if (!assume_reduced && !is_squarefree(h))
        throw std::invalid_argument("h has a repeated factor");
    int m = h.nvars();
    bool homogeneous = h.is_homogeneous();
    int bound = degree_bound >= 0 ? degree_bound : h.degree();

    FreeBasisResult res;
    std::vector<Derivation> chosen;
    std::vector<int> chosen_deg;

    for (int d = 0; d <= bound && (int)chosen.size() < m; ++d) {
        std::vector<Monomial> ambient =
            homogeneous ? monomials_of_degree(m, d) : monomials_up_to(m, d);
        std::map<Monomial, size_t> index;
        for (size_t a = 0; a < ambient.size(); ++a) index[ambient[a]] = a;

        Echelon ech;
        for (size_t j = 0; j < chosen.size(); ++j) {
            int gap = d - chosen_deg[j];
            if (gap < 0) continue;
            std::vector<Monomial> mults =
                homogeneous ? monomials_of_degree(m, gap) : monomials_up_to(m, gap);
            for (auto& mono : mults) {
                auto v = flatten(mono_multiple(chosen[j], mono), ambient, index);
                if (ech.reduce(v)) ech.insert(std::move(v));
            }
        }

        std::vector<Derivation> space =
            homogeneous ? graded_log_derivations(h, d).basis
                        : bounded_log_derivations(h, d);
        for (auto& theta : space) {
            if ((int)chosen.size() == m) break;
            auto v = flatten(theta, ambient, index);
            if (!ech.reduce(v)) continue;
            Derivation fresh = unflatten(v, m, ambient);
            if (!is_logarithmic(fresh, h))
                throw std::logic_error("echelon residue lost logarithmicity");
            ech.insert(std::move(v));
            chosen.push_back(fresh);
            chosen_deg.push_back(d);
        }
    }

    if ((int)chosen.size() < m) {
        res.verdict = FreenessVerdict::Inconclusive;
        res.detail = "fewer than " + std::to_string(m) +
                     " independent logarithmic derivations up to degree " +
                     std::to_string(bound);
        return res;
    }
    SaitoResult saito = saito_test(h, chosen);
    if (saito.status == SaitoStatus::Free) {
        res.verdict = FreenessVerdict::Free;
        res.certificate = saito.certificate;
        res.exponents = saito.certificate->exponents();
        return res;
    }
    res.verdict = FreenessVerdict::Inconclusive;
    res.detail = "determinant of the selected basis is not proportional to h";
    return res;
}

TeraoVerdict terao_factorization_check(const Arrangement& A) {
    CharPoly chi = characteristic_polynomial(A);
    std::vector<long long> c = chi.coeffs;  // t-descending
    TeraoVerdict v;

    // Peel t factors, then integer roots by trial over divisors of the
    // constant term.
    while (c.size() > 1 && c.back() == 0) {
        v.integer_roots.push_back(0);
        c.pop_back();
    }
    bool progress = true;
    while (c.size() > 1 && progress) {
        progress = false;
        long long tail = c.back();
        for (long long r = 1; r * r <= std::abs(tail) && !progress; ++r) {
            if (tail % r != 0) continue;
            for (long long cand : {r, -r, tail / r, -(tail / r)}) {
                // synthetic evaluation / deflation
                long long acc = 0;
                std::vector<long long> q;
                for (long long coef : c) {
                    acc = acc * cand + coef;
                    q.push_back(acc);
                }
                if (acc == 0) {
                    q.pop_back();
                    c = q;
                    v.integer_roots.push_back(cand);
                    progress = true;
                    break;
                }
            }
        }
    }
    if (c.size() > 1) {
        v.certified_non_free = true;
        std::ostringstream os;
        os << "characteristic polynomial has a non-integer root; unfactored part of degree "
           << c.size() - 1;
        v.detail = os.str();
    } else {
        std::sort(v.integer_roots.begin(), v.integer_roots.end());
        v.detail = "characteristic polynomial splits over the integers";
    }
    return v;
}

FreeBasisResult arrangement_freeness(const Arrangement& A) {
    if (A.hyperplanes.empty()) {
        FreeBasisResult res;
        res.verdict = FreenessVerdict::Free;
        res.detail = "empty arrangement; the full derivation module is free";
        return res;
    }
    FreeBasisResult res = find_free_basis(defining_polynomial(A), -1, /*assume_reduced=*/true);
    if (res.verdict == FreenessVerdict::Free) return res;
    TeraoVerdict t = terao_factorization_check(A);
    if (t.certified_non_free) {
        res.verdict = FreenessVerdict::CertifiedNonFree;
        res.detail = t.detail;
    }
    return res;
}

ChowClass chern_log_sheaf(const std::vector<int>& exponents, int n) {
    ChowClass c(n);
    if (exponents.empty()) {
        for (int k = 0; k <= n; ++k) c.coeffs[k] = binomial(n + 1, k);
        return c;
    }
    std::vector<int> e = exponents;
    auto it = std::find(e.begin(), e.end(), 1);
    if (it == e.end())
        throw std::domain_error(
            "no exponent equal to 1: the Euler-derivation convention does not apply");
    e.erase(it);
    c.coeffs[0] = 1;
    for (int exp : e) {
        ChowClass f(n);
        f.coeffs[0] = 1;
        if (n >= 1) f.coeffs[1] = 1 - exp;
        c = c * f;
    }
    return c;
}

}  // namespace logcsm
