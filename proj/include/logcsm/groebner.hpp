#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "logcsm/polynomial.hpp"

namespace logcsm {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
    // Reduction-step budget; Buchberger has no useful worst-case bound,
    // so exceeding the cap raises ResourceLimitError.
    long step_cap = 1000000;
};

struct Ideal {
    std::vector<Polynomial> generators;  // nonzero, same ring
    MonomialOrder ord = MonomialOrder::grevlex();
};

struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder ord;
    bool reduced = true;
};

// Relations (a_1..a_m) with sum a_i f_i = 0 for a fixed generator vector.
struct SyzygyModule {
    std::vector<std::vector<Polynomial>> relations;
};

// Ideal in the ring [x_1..x_m, T_1..T_k]; generators T-homogeneous.
struct PresentationIdeal {
    int base_vars = 0;
    int pres_vars = 0;
    std::vector<Polynomial> generators;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// p = sum q_i d_i + r with no term of r divisible by any leading term of d.
DivisionResult divide_reduce(const Polynomial& p, const std::vector<Polynomial>& divisors,
                             const MonomialOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

// Reduced Groebner basis (monic, minimal, tail-reduced); deterministic for
// a fixed input order.
GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& opts = {});

bool ideal_membership(const Polynomial& p, const Ideal& I, const GroebnerOptions& opts = {});

// Two generator sets span the same ideal iff their reduced bases coincide.
bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});

// Generators of I intersected with the subring omitting drop_vars; the
// result lives in the smaller ring (remaining variables keep their order).
Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars,
                const GroebnerOptions& opts = {});

// Generating set of the syzygy module of f, via cofactor tracking through
// Buchberger (Schreyer); every returned relation is re-verified by exact
// expansion.
SyzygyModule syzygies(const std::vector<Polynomial>& f, const GroebnerOptions& opts = {});

// (h, d1 h, ..., dm h); throws std::invalid_argument for constant h.
Ideal jacobian_ideal(const Polynomial& h);

// Linear forms sum a_i T_i over the syzygy generators of f; presents
// Sym of the ideal (f).
PresentationIdeal sym_ideal(const std::vector<Polynomial>& f, const GroebnerOptions& opts = {});

// Kernel of T_i -> t f_i, computed by eliminating t from (T_i - t f_i).
PresentationIdeal rees_ideal(const std::vector<Polynomial>& f, const GroebnerOptions& opts = {});

struct LinearTypeResult {
    bool linear_type = false;
    // On false: a Rees generator outside the Sym ideal.
    std::optional<Polynomial> witness;
};

// Rees = Sym test; the Sym ideal is always contained in the Rees ideal, so
// one inclusion suffices.
LinearTypeResult is_linear_type(const std::vector<Polynomial>& f,
                                const GroebnerOptions& opts = {});

// Order used for presentation rings (base vars first, then T's), grevlex.
MonomialOrder presentation_order();

}  // namespace logcsm
