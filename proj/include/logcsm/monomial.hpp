#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace logcsm {

// Exponent vector; length is the ambient variable count.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Requires divides(b, a).
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

enum class OrderKind { Lex, GrLex, GrevLex, Block };

// Total multiplicative well-order on monomials. Block orders compare the
// first `elim` variables by grevlex, breaking ties by grevlex on the rest;
// placing the variables to eliminate in the leading block makes the order
// an elimination order for them.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int elim = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grlex() { return {OrderKind::GrLex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder block(int elim_count) { return {OrderKind::Block, elim_count}; }

    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::Lex: return lex_less(a, b, 0, (int)a.size());
            case OrderKind::GrLex: {
                int da = total_degree(a), db = total_degree(b);
                if (da != db) return da < db;
                return lex_less(a, b, 0, (int)a.size());
            }
            case OrderKind::GrevLex: return grevlex_less(a, b, 0, (int)a.size());
            case OrderKind::Block: {
                if (grevlex_less(a, b, 0, elim)) return true;
                if (grevlex_less(b, a, 0, elim)) return false;
                return grevlex_less(a, b, elim, (int)a.size());
            }
        }
        return false;
    }

    bool equal(const Monomial& a, const Monomial& b) const { return a == b; }

private:
    static bool lex_less(const Monomial& a, const Monomial& b, int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    static bool grevlex_less(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da < db;
        for (int i = hi - 1; i >= lo; --i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

}  // namespace logcsm
