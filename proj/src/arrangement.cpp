#include "logcsm/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace logcsm {

int row_reduce(std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows[0].size();
    size_t pivot_row = 0;
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
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return (int)pivot_row;
}

void validate(const Arrangement& A) {
    if (A.n < 0) throw std::invalid_argument("negative ambient dimension");
    for (auto& h : A.hyperplanes) {
        if ((int)h.size() != A.n + 1)
            throw std::invalid_argument("hyperplane coefficient length mismatch");
        bool zero = true;
        for (auto& c : h)
            if (c != 0) zero = false;
        if (zero) throw std::invalid_argument("zero hyperplane vector");
    }
    // Pairwise non-proportional: the divisor is reduced.
    for (size_t i = 0; i < A.hyperplanes.size(); ++i)
        for (size_t j = i + 1; j < A.hyperplanes.size(); ++j) {
            std::vector<std::vector<Rational>> rows{A.hyperplanes[i], A.hyperplanes[j]};
            if (row_reduce(rows) < 2)
                throw std::invalid_argument("repeated hyperplane (up to scale)");
        }
}

namespace {

// Rank of the subfamily indexed by S.
int subset_rank(const Arrangement& A, const std::vector<int>& S) {
    std::vector<std::vector<Rational>> rows;
    for (int i : S) rows.push_back(A.hyperplanes[i]);
    return row_reduce(rows);
}

// All hyperplanes containing the intersection of the subfamily S.
Flat close_up(const Arrangement& A, const std::vector<int>& S) {
    std::vector<std::vector<Rational>> rows;
    for (int i : S) rows.push_back(A.hyperplanes[i]);
    int r = row_reduce(rows);
    Flat f;
    f.rank = r;
    for (int j = 0; j < (int)A.hyperplanes.size(); ++j) {
        std::vector<std::vector<Rational>> probe = rows;
        probe.push_back(A.hyperplanes[j]);
        if (row_reduce(probe) == r) f.closed.push_back(j);
    }
    std::vector<std::vector<Rational>> closed_rows;
    for (int i : f.closed) closed_rows.push_back(A.hyperplanes[i]);
    row_reduce(closed_rows);
    f.basis = std::move(closed_rows);
    return f;
}

}  // namespace

bool IntersectionLattice::leq(size_t x, size_t y) const {
    return std::includes(flats[y].closed.begin(), flats[y].closed.end(),
                         flats[x].closed.begin(), flats[x].closed.end());
}

IntersectionLattice build_lattice(const Arrangement& A) {
    validate(A);
    IntersectionLattice L;
    std::map<std::vector<int>, size_t> seen;

    Flat bottom = close_up(A, {});
    seen[bottom.closed] = 0;
    L.flats.push_back(bottom);

    // Breadth-first closure under adding one hyperplane at a time.
    for (size_t head = 0; head < L.flats.size(); ++head) {
        Flat current = L.flats[head];
        for (int j = 0; j < (int)A.hyperplanes.size(); ++j) {
            if (std::binary_search(current.closed.begin(), current.closed.end(), j)) continue;
            std::vector<int> S = current.closed;
            S.push_back(j);
            Flat next = close_up(A, S);
            if (!seen.count(next.closed)) {
                seen[next.closed] = L.flats.size();
                L.flats.push_back(next);
            }
        }
    }

    std::sort(L.flats.begin(), L.flats.end(), [](const Flat& a, const Flat& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.closed < b.closed;
    });

    // mu(bottom, x) by the recursive sum rule.
    L.mobius.assign(L.flats.size(), 0);
    for (size_t x = 0; x < L.flats.size(); ++x) {
        if (L.flats[x].rank == 0) {
            L.mobius[x] = 1;
            continue;
        }
        long long acc = 0;
        for (size_t y = 0; y < x; ++y)  // flats are rank-sorted, so y < x covers all y < x in the order
            if (L.leq(y, x)) acc += L.mobius[y];
        L.mobius[x] = -acc;
    }
    return L;
}

CharPoly characteristic_polynomial(const Arrangement& A) {
    IntersectionLattice L = build_lattice(A);
    int deg = A.n + 1;
    CharPoly chi;
    chi.coeffs.assign(deg + 1, 0);
    for (size_t x = 0; x < L.flats.size(); ++x) {
        int dim = deg - L.flats[x].rank;
        chi.coeffs[deg - dim] += L.mobius[x];
    }
    return chi;
}

std::string CharPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    int deg = degree();
    for (int i = 0; i <= deg; ++i) {
        long long a = coeffs[i];
        if (a == 0) continue;
        int e = deg - i;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0 || a != 1) os << a;
        if (e > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (e > 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    return os.str();
}

long long CharPoly::eval(long long t) const {
    long long acc = 0;
    for (long long c : coeffs) acc = acc * t + c;
    return acc;
}

ChowClass csm_complement(const Arrangement& A) {
    IntersectionLattice L = build_lattice(A);
    ChowClass out(A.n);
    for (size_t x = 0; x < L.flats.size(); ++x) {
        int d = A.n - L.flats[x].rank;  // dimension of the projectivized flat
        if (d < 0) continue;            // the origin contributes nothing projectively
        out = out + csm_projective_subspace(d, A.n) * L.mobius[x];
    }
    return out;
}

long long euler_characteristic_complement(const Arrangement& A) {
    IntersectionLattice L = build_lattice(A);
    long long acc = 0;
    for (size_t x = 0; x < L.flats.size(); ++x)
        acc += L.mobius[x] * (long long)(A.n + 1 - L.flats[x].rank);
    return acc;
}

Polynomial defining_polynomial(const Arrangement& A) {
    validate(A);
    int nv = A.n + 1;
    Polynomial q = Polynomial::constant(nv, Rational(1));
    for (auto& h : A.hyperplanes) {
        Polynomial form(nv);
        for (int i = 0; i < nv; ++i)
            if (h[i] != 0) form = form + Polynomial::variable(nv, i) * h[i];
        q = q * form;
    }
    return q;
}

}  // namespace logcsm
