#include "cicy/field.hpp"

#include <algorithm>
#include <numeric>

namespace cicy {

namespace {

// Dense univariate arithmetic mod p, local to this file (the public univariate
// toolkit lives in univar.hpp; this copy avoids a header cycle and stays tiny).
using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly polymod(Poly f, const Poly& m, const PrimeField& F) {
    trim(f);
    size_t dm = m.size() - 1;
    while (f.size() > dm) {
        uint32_t lead = f.back();
        size_t shift = f.size() - 1 - dm;
        if (lead != 0) {
            uint32_t c = F.mul(lead, F.inv(m.back()));
            for (size_t i = 0; i < m.size(); ++i)
                f[shift + i] = F.sub(f[shift + i], F.mul(c, m[i]));
        }
        trim(f);
        if (f.empty()) break;
    }
    return f;
}

Poly polymul(const Poly& a, const Poly& b, const PrimeField& F) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

Poly polypowmod(Poly base, uint64_t e, const Poly& m, const PrimeField& F) {
    Poly r{1};
    base = polymod(std::move(base), m, F);
    while (e) {
        if (e & 1) r = polymod(polymul(r, base, F), m, F);
        base = polymod(polymul(base, base, F), m, F);
        e >>= 1;
    }
    return r;
}

Poly polygcd(Poly a, Poly b, const PrimeField& F) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = polymod(std::move(a), b, F);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        uint32_t c = F.inv(a.back());
        for (auto& v : a) v = F.mul(v, c);
    }
    return a;
}

// x^(p^e) mod m via repeated Frobenius.
Poly frobenius_power(const Poly& m, uint64_t e, const PrimeField& F) {
    Poly x{0, 1};
    Poly r = polymod(x, m, F);
    for (uint64_t i = 0; i < e; ++i) r = polypowmod(r, F.p(), m, F);
    return r;
}

bool is_irreducible(const Poly& m, const PrimeField& F) {
    size_t k = m.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    // x^(p^k) == x mod m, and gcd(x^(p^(k/q)) - x, m) == 1 for prime q | k.
    Poly xq = frobenius_power(m, k, F);
    Poly x{0, 1};
    Poly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = F.sub(diff[1], 1);
    trim(diff);
    if (!diff.empty()) return false;
    size_t rem = k;
    for (size_t q = 2; q * q <= rem; ++q) {
        if (rem % q) continue;
        while (rem % q == 0) rem /= q;
        Poly h = frobenius_power(m, k / q, F);
        h.resize(std::max<size_t>(h.size(), 2), 0);
        h[1] = F.sub(h[1], 1);
        Poly g = polygcd(h, m, F);
        if (g.size() != 1) return false;
    }
    if (rem > 1) {
        Poly h = frobenius_power(m, k / rem, F);
        h.resize(std::max<size_t>(h.size(), 2), 0);
        h[1] = F.sub(h[1], 1);
        Poly g = polygcd(h, m, F);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

ExtensionField::ExtensionField(PrimeField base, std::vector<uint32_t> monic_modulus)
    : F_(base), k_(0) {
    trim(monic_modulus);
    if (monic_modulus.size() < 2)
        throw std::invalid_argument("ExtensionField: modulus must have degree >= 1");
    if (monic_modulus.back() != 1)
        throw std::invalid_argument("ExtensionField: modulus must be monic");
    for (auto c : monic_modulus)
        if (c >= F_.p()) throw std::invalid_argument("ExtensionField: coefficient out of range");
    if (!is_irreducible(monic_modulus, F_))
        throw std::invalid_argument("ExtensionField: modulus is reducible");
    k_ = monic_modulus.size() - 1;
    mod_ = std::move(monic_modulus);
}

bool ExtensionField::is_zero(const Elt& a) const {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

ExtensionField::Elt ExtensionField::add(const Elt& a, const Elt& b) const {
    Elt r(k_);
    for (size_t i = 0; i < k_; ++i) r[i] = F_.add(a[i], b[i]);
    return r;
}

ExtensionField::Elt ExtensionField::sub(const Elt& a, const Elt& b) const {
    Elt r(k_);
    for (size_t i = 0; i < k_; ++i) r[i] = F_.sub(a[i], b[i]);
    return r;
}

ExtensionField::Elt ExtensionField::neg(const Elt& a) const {
    Elt r(k_);
    for (size_t i = 0; i < k_; ++i) r[i] = F_.neg(a[i]);
    return r;
}

ExtensionField::Elt ExtensionField::mul(const Elt& a, const Elt& b) const {
    Poly prod = polymul(Poly(a.begin(), a.end()), Poly(b.begin(), b.end()), F_);
    Poly red = polymod(std::move(prod), mod_, F_);
    Elt r(k_, 0);
    for (size_t i = 0; i < red.size(); ++i) r[i] = red[i];
    return r;
}

ExtensionField::Elt ExtensionField::pow(Elt a, uint64_t e) const {
    Elt r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

ExtensionField::Elt ExtensionField::inv(const Elt& a) const {
    if (is_zero(a)) throw std::domain_error("ExtensionField: inverse of zero");
    // a^(p^k - 2)
    uint64_t order = 1;
    for (size_t i = 0; i < k_; ++i) order *= F_.p();
    return pow(a, order - 2);
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    *this = make(n, d);
}

Rational Rational::make(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
        throw std::overflow_error("Rational: overflow");
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return make((__int128)num_ * o.den_ + (__int128)o.num_ * den_, (__int128)den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
    return make((__int128)num_ * o.den_ - (__int128)o.num_ * den_, (__int128)den_ * o.den_);
}
Rational Rational::operator*(const Rational& o) const {
    return make((__int128)num_ * o.num_, (__int128)den_ * o.den_);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make((__int128)num_ * o.den_, (__int128)den_ * o.num_);
}

}  // namespace cicy
