#include "logcsm/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace logcsm {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    return term(m, Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p((int)m.size());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (auto& [m, c] : terms_)
        if (total_degree(m) != d) return false;
    return true;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if ((int)m.size() != nvars_) throw std::invalid_argument("monomial length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-list mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(nvars_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("derivative index out of range");
    Polynomial r(nvars_);
    for (auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rational(m[var]));
    }
    return r;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::remap_variables(const std::vector<int>& perm, int new_nvars) const {
    if ((int)perm.size() != nvars_) throw std::invalid_argument("permutation size mismatch");
    Polynomial r(new_nvars);
    for (auto& [m, c] : terms_) {
        Monomial nm(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (perm[i] < 0) throw std::invalid_argument("remap drops an occupied variable");
            nm[perm[i]] += m[i];
        }
        r.add_term(nm, c);
    }
    return r;
}

std::vector<int> Polynomial::support_variables() const {
    std::vector<bool> used(nvars_, false);
    for (auto& [m, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) used[i] = true;
    std::vector<int> out;
    for (int i = 0; i < nvars_; ++i)
        if (used[i]) out.push_back(i);
    return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(sorted.begin(), sorted.end(),
              [&](auto& a, auto& b) { return ord.less(b.first, a.first); });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : sorted) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = total_degree(m) > 0;
        bool coeff_shown = !has_vars || a != 1;
        if (coeff_shown) os << rational_to_string(a);
        bool need_star = coeff_shown;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            os << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (m[i] > 1) os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

std::vector<std::string> default_var_names(int nvars) {
    static const char* small[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i)
        names.push_back(nvars <= 4 ? small[i] : "x" + std::to_string(i + 1));
    return names;
}

}  // namespace logcsm
