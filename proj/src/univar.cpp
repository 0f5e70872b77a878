#include "cicy/univar.hpp"

#include <algorithm>
#include <stdexcept>

namespace cicy {

void uni_trim(UniPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b, const PrimeField& F) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        uint32_t x = i < a.c.size() ? a.c[i] : 0;
        uint32_t y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.add(x, y);
    }
    uni_trim(r);
    return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b, const PrimeField& F) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        uint32_t x = i < a.c.size() ? a.c[i] : 0;
        uint32_t y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.sub(x, y);
    }
    uni_trim(r);
    return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b, const PrimeField& F) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return r;
}

UniPoly uni_monic(UniPoly f, const PrimeField& F) {
    uni_trim(f);
    if (f.is_zero() || f.lead() == 1) return f;
    uint32_t s = F.inv(f.lead());
    for (auto& v : f.c) v = F.mul(v, s);
    return f;
}

std::pair<UniPoly, UniPoly> uni_divmod(UniPoly f, const UniPoly& g, const PrimeField& F) {
    if (g.is_zero()) throw std::domain_error("uni_divmod: division by zero");
    uni_trim(f);
    UniPoly q;
    if (f.degree() >= g.degree()) q.c.assign(f.degree() - g.degree() + 1, 0);
    uint32_t linv = F.inv(g.lead());
    while (!f.is_zero() && f.degree() >= g.degree()) {
        int shift = f.degree() - g.degree();
        uint32_t c = F.mul(f.lead(), linv);
        q.c[shift] = c;
        for (size_t i = 0; i < g.c.size(); ++i)
            f.c[shift + i] = F.sub(f.c[shift + i], F.mul(c, g.c[i]));
        uni_trim(f);
    }
    uni_trim(q);
    return {q, f};
}

UniPoly uni_mod(UniPoly f, const UniPoly& g, const PrimeField& F) {
    return uni_divmod(std::move(f), g, F).second;
}

UniPoly uni_derivative(const UniPoly& f, const PrimeField& F) {
    UniPoly r;
    if (f.c.size() <= 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = F.mul(f.c[i], (uint32_t)(i % F.p()));
    uni_trim(r);
    return r;
}

uint32_t uni_eval(const UniPoly& f, uint32_t x, const PrimeField& F) {
    uint32_t acc = 0;
    for (size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
    return acc;
}

UniPoly uni_gcd(UniPoly a, UniPoly b, const PrimeField& F) {
    uni_trim(a);
    uni_trim(b);
    while (!b.is_zero()) {
        a = uni_mod(std::move(a), b, F);
        std::swap(a, b);
    }
    return uni_monic(std::move(a), F);
}

UniPoly uni_powmod(UniPoly base, uint64_t e, const UniPoly& m, const PrimeField& F) {
    UniPoly r{{1}};
    base = uni_mod(std::move(base), m, F);
    while (e) {
        if (e & 1) r = uni_mod(uni_mul(r, base, F), m, F);
        base = uni_mod(uni_mul(base, base, F), m, F);
        e >>= 1;
    }
    return r;
}

namespace {

// Exact p-th root of a polynomial in x^p; valid over F_p since a^p = a.
UniPoly pth_root(const UniPoly& f, const PrimeField& F) {
    UniPoly h;
    h.c.resize((f.c.size() - 1) / F.p() + 1, 0);
    for (size_t i = 0; i < h.c.size(); ++i) h.c[i] = f.c[i * F.p()];
    return h;
}

}  // namespace

UniPoly squarefree_part(const UniPoly& f, const PrimeField& F) {
    UniPoly g = uni_monic(f, F);
    if (g.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (g.degree() == 0) return g;
    UniPoly d = uni_derivative(g, F);
    if (d.is_zero()) return squarefree_part(pth_root(g, F), F);
    // w collects the factors whose multiplicity is prime to p
    UniPoly w = uni_divmod(g, uni_gcd(g, d, F), F).first;
    // strip them from g; what remains is a p-th power with disjoint factors
    UniPoly c = g;
    while (true) {
        UniPoly s = uni_gcd(c, w, F);
        if (s.degree() <= 0) break;
        c = uni_divmod(std::move(c), s, F).first;
    }
    if (c.degree() > 0) w = uni_mul(w, squarefree_part(pth_root(c, F), F), F);
    return uni_monic(std::move(w), F);
}

std::map<int, int> distinct_degree_factorization(const UniPoly& f, const PrimeField& F) {
    UniPoly g = squarefree_part(f, F);
    std::map<int, int> out;
    UniPoly h = UniPoly::x();
    h = uni_mod(std::move(h), g, F);
    int d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > g.degree()) {
            out[g.degree()] += g.degree();
            break;
        }
        h = uni_powmod(std::move(h), F.p(), g, F);
        UniPoly hx = uni_sub(h, UniPoly::x(), F);
        UniPoly factor = uni_gcd(hx, g, F);
        if (factor.degree() > 0) {
            out[d] += factor.degree();
            g = uni_divmod(std::move(g), factor, F).first;
            h = uni_mod(std::move(h), g, F);
        }
    }
    return out;
}

std::vector<uint32_t> rational_roots(const UniPoly& f, const PrimeField& F) {
    UniPoly g = squarefree_part(f, F);
    std::vector<uint32_t> roots;
    // gcd with x^p - x isolates the linear factors, then scan
    UniPoly xp = uni_powmod(UniPoly::x(), F.p(), g, F);
    UniPoly lin = uni_gcd(uni_sub(xp, UniPoly::x(), F), g, F);
    if (lin.degree() <= 0) return roots;
    for (uint32_t v = 0; v < F.p(); ++v)
        if (uni_eval(lin, v, F) == 0) roots.push_back(v);
    return roots;
}

}  // namespace cicy
