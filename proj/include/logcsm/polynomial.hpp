#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logcsm/monomial.hpp"
#include "logcsm/rational.hpp"

namespace logcsm {

// Sparse multivariate polynomial with exact rational coefficients.
// Variables are positional; names are formatting metadata only.
// Invariant: no stored zero coefficients.
class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);
    static Polynomial term(const Monomial& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    int degree() const;  // total degree; -1 for zero
    bool is_homogeneous() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int var) const;

    // Largest term under ord; throws std::domain_error on zero.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const;
    Monomial leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).first; }

    // Remap variables: result has new_nvars variables, old variable i
    // becomes new variable perm[i].
    Polynomial remap_variables(const std::vector<int>& perm, int new_nvars) const;

    // Indices of variables that actually occur.
    std::vector<int> support_variables() const;

    // Canonical text: terms sorted grevlex-descending, signs folded into
    // coefficients.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check_compatible(const Polynomial& o) const;
    int nvars_;
    std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

std::vector<std::string> default_var_names(int nvars);

}  // namespace logcsm
