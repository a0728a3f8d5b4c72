#include "logcsm/chow.hpp"

#include <sstream>
#include <stdexcept>

namespace logcsm {

ChowClass::ChowClass(int n, std::vector<long long> c) : n(n), coeffs(std::move(c)) {
    if ((int)coeffs.size() != n + 1) throw std::invalid_argument("coefficient length mismatch");
}

ChowClass ChowClass::one(int n) {
    ChowClass c(n);
    c.coeffs[0] = 1;
    return c;
}

ChowClass ChowClass::hyperplane_power(int n, int k) {
    ChowClass c(n);
    if (k >= 0 && k <= n) c.coeffs[k] = 1;
    return c;
}

bool ChowClass::is_zero() const {
    for (long long a : coeffs)
        if (a != 0) return false;
    return true;
}

static void check_same(const ChowClass& a, const ChowClass& b) {
    if (a.n != b.n) throw std::invalid_argument("ambient truncation mismatch");
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
    check_same(*this, o);
    ChowClass r(n);
    for (int k = 0; k <= n; ++k) r.coeffs[k] = coeffs[k] + o.coeffs[k];
    return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    check_same(*this, o);
    ChowClass r(n);
    for (int k = 0; k <= n; ++k) r.coeffs[k] = coeffs[k] - o.coeffs[k];
    return r;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
    check_same(*this, o);
    ChowClass r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    return r;
}

ChowClass ChowClass::operator*(long long s) const {
    ChowClass r(n);
    for (int k = 0; k <= n; ++k) r.coeffs[k] = coeffs[k] * s;
    return r;
}

std::string ChowClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= n; ++k) {
        long long a = coeffs[k];
        if (a == 0) continue;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0 || a != 1) os << a;
        if (k > 0) {
            os << "h";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

ChowClass whitney_product(const std::vector<ChowClass>& classes) {
    if (classes.empty()) throw std::invalid_argument("empty class list");
    ChowClass acc = ChowClass::one(classes.front().n);
    for (auto& c : classes) acc = acc * c;
    return acc;
}

ChowClass segre_of_bundle(const ChowClass& c) {
    if (c.coeffs.empty() || c.coeffs[0] != 1)
        throw std::invalid_argument("total Chern class must have constant term 1");
    ChowClass s(c.n);
    s.coeffs[0] = 1;
    for (int k = 1; k <= c.n; ++k) {
        long long acc = 0;
        for (int i = 1; i <= k; ++i) acc += c.coeffs[i] * s.coeffs[k - i];
        s.coeffs[k] = -acc;
    }
    return s;
}

ChowClass dual_class(const ChowClass& g) {
    ChowClass r(g.n);
    for (int k = 0; k <= g.n; ++k) {
        int dim = g.n - k;
        r.coeffs[k] = (dim % 2 == 0) ? g.coeffs[k] : -g.coeffs[k];
    }
    return r;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ChowClass csm_projective_subspace(int d, int n) {
    if (d < 0 || d > n) throw std::out_of_range("subspace dimension out of range");
    ChowClass c(n);
    for (int k = 0; k <= d; ++k) c.coeffs[n - d + k] = binomial(d + 1, k);
    return c;
}

}  // namespace logcsm
