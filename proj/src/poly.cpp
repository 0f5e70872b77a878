#include "cicy/poly.hpp"

#include <algorithm>

namespace cicy {

void SparsePoly::add_term(const Exponents& m, uint32_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = F_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, F_.neg(c));
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r(W_, F_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, F_.mul(c1, c2));
    return r;
}

SparsePoly SparsePoly::scaled(uint32_t c) const {
    SparsePoly r(W_, F_);
    if (c == 0) return r;
    for (auto& [m, v] : terms_) r.terms_.emplace(m, F_.mul(v, c));
    return r;
}

SparsePoly SparsePoly::shifted(const Exponents& m, uint32_t c) const {
    SparsePoly r(W_, F_);
    if (c == 0) return r;
    for (auto& [m0, v] : terms_) r.terms_.emplace(m0 + m, F_.mul(v, c));
    return r;
}

std::optional<Multidegree> SparsePoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::optional<Multidegree> deg;
    for (auto& [m, c] : terms_) {
        Multidegree d = monomial_multidegree(W_, std::span<const uint8_t>(m.e.data(), W_.nvars));
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

SparsePoly SparsePoly::substituted(const std::array<int, 9>& assignment) const {
    SparsePoly r(W_, F_);
    for (auto& [m, c] : terms_) {
        Exponents m2 = m;
        bool dead = false;
        for (int v = 0; v < W_.nvars; ++v) {
            if (assignment[v] == 0 && m[v] > 0) { dead = true; break; }
            if (assignment[v] == 1) m2[v] = 0;
        }
        if (!dead) r.add_term(m2, c);
    }
    return r;
}

uint32_t SparsePoly::evaluate(std::span<const uint32_t> point) const {
    uint32_t acc = 0;
    for (auto& [m, c] : terms_) {
        uint32_t t = c;
        for (int v = 0; v < W_.nvars; ++v)
            if (m[v]) t = F_.mul(t, F_.pow(point[v], m[v]));
        acc = F_.add(acc, t);
    }
    return acc;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c);
        for (int v = 0; v < W_.nvars; ++v) {
            if (m[v] == 0) continue;
            s += "*" + W_.var_name(v);
            if (m[v] > 1) s += "^" + std::to_string((int)m[v]);
        }
    }
    return s;
}

SparsePoly partial_derivative(const SparsePoly& f, int var) {
    SparsePoly r(f.weights(), f.field());
    const PrimeField& F = f.field();
    for (auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        Exponents m2 = m;
        m2[var] -= 1;
        r.add_term(m2, F.mul(c, m[var] % F.p()));
    }
    return r;
}

namespace {

// Emit all q with q_0 + ... + q_{count-1} = total into expo[offset..], calling
// sink at each leaf.
void compositions(int total, int count, int offset, Exponents& expo,
                  const std::function<void(const Exponents&)>& sink) {
    if (count == 1) {
        if (total > 255) return;
        expo[offset] = (uint8_t)total;
        sink(expo);
        expo[offset] = 0;
        return;
    }
    for (int v = 0; v <= total; ++v) {
        expo[offset] = (uint8_t)v;
        compositions(total - v, count - 1, offset + 1, expo, sink);
    }
    expo[offset] = 0;
}

}  // namespace

GradedPieceBasis enumerate_basis(const WeightMatrix& W, const Multidegree& d) {
    if (d.rank != W.rows) throw std::invalid_argument("enumerate_basis: degree rank mismatch");
    GradedPieceBasis B;
    B.degree = d;

    auto push_base_part = [&](Exponents& expo, int D) {
        // D = total degree in (x6, x7)
        if (D < 0) return;
        for (int e6 = 0; e6 <= D; ++e6) {
            expo[5] = (uint8_t)e6;
            expo[6] = (uint8_t)(D - e6);
            B.monomials.push_back(expo);
        }
        expo[5] = expo[6] = 0;
    };

    if (W.rows == 2) {
        int d2 = d[1];
        if (d2 >= 0 && d2 <= 255) {
            Exponents expo;
            compositions(d2, 5, 0, expo, [&](const Exponents& q) {
                int dot = 0;
                for (int j = 0; j < 5; ++j) dot += (int)q[j] * -W.cols[j][0];
                Exponents full = q;
                push_base_part(full, d[0] + dot);
            });
        }
    } else {
        int n = d[2];
        if (n < 0) throw std::invalid_argument("enumerate_basis: d3 must be >= 0");
        for (int g2 = 0; g2 <= n && g2 <= 255; ++g2) {
            int g1 = n - g2;
            if (g1 > 255) continue;
            // row 2: sum q = d2 - g1*cols[7][1] - g2*cols[8][1]
            int fibre_total = d[1] - g1 * W.cols[7][1] - g2 * W.cols[8][1];
            if (fibre_total < 0) continue;
            Exponents expo;
            expo[7] = (uint8_t)g1;
            expo[8] = (uint8_t)g2;
            compositions(fibre_total, 5, 0, expo, [&](const Exponents& q) {
                int dot = 0;
                for (int j = 0; j < 5; ++j) dot += (int)q[j] * W.cols[j][0];
                int D = d[0] - dot - g1 * W.cols[7][0] - g2 * W.cols[8][0];
                Exponents full = q;
                push_base_part(full, D);
            });
        }
    }

    std::sort(B.monomials.begin(), B.monomials.end());
    B.index.reserve(B.monomials.size());
    for (uint32_t i = 0; i < B.monomials.size(); ++i) B.index.emplace(B.monomials[i], i);
    return B;
}

SparsePoly random_section(const WeightMatrix& W, const Multidegree& d, const PrimeField& F,
                          uint64_t seed) {
    GradedPieceBasis B = enumerate_basis(W, d);
    if (B.monomials.empty()) throw std::invalid_argument("random_section: empty graded piece");
    uint64_t salt = 0x5eed;
    for (int i = 0; i < d.rank; ++i) salt = salt * 1000003 + (uint64_t)(int64_t)d[i];
    Rng rng(seed * 0x9e3779b97f4a7c15ull + salt * 2654435761ull + F.p());
    SparsePoly f(W, F);
    for (auto& m : B.monomials) f.add_term(m, rng.nonzero(F));
    return f;
}

}  // namespace cicy
