#pragma once

#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cicy/field.hpp"
#include "cicy/grading.hpp"

namespace cicy {

/// Fixed-width exponent vector, at most 9 variables with entries <= 255.
struct Exponents {
    std::array<uint8_t, 9> e{};

    uint8_t operator[](int i) const { return e[i]; }
    uint8_t& operator[](int i) { return e[i]; }
    bool operator==(const Exponents& o) const { return e == o.e; }
    bool operator<(const Exponents& o) const { return e < o.e; }

    Exponents operator+(const Exponents& o) const {
        Exponents r;
        for (int i = 0; i < 9; ++i) {
            unsigned s = (unsigned)e[i] + o.e[i];
            if (s > 255) throw std::overflow_error("Exponents: entry overflow");
            r.e[i] = (uint8_t)s;
        }
        return r;
    }
    int total() const {
        int t = 0;
        for (auto v : e) t += v;
        return t;
    }
    static Exponents unit(int v, uint8_t k = 1) {
        Exponents r;
        r.e[v] = k;
        return r;
    }
};

struct ExponentsHash {
    size_t operator()(const Exponents& x) const {
        uint64_t h = 1469598103934665603ull;
        for (auto b : x.e) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return (size_t)h;
    }
};

/// Sparse multivariate polynomial over F_p, tied to a weight matrix.
/// No zero coefficients are stored; term order is the deterministic map order.
class SparsePoly {
public:
    SparsePoly(const WeightMatrix& W, PrimeField F) : W_(W), F_(F) {}

    const WeightMatrix& weights() const { return W_; }
    const PrimeField& field() const { return F_; }
    const std::map<Exponents, uint32_t>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& m, uint32_t c);
    uint32_t coeff(const Exponents& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly scaled(uint32_t c) const;
    /// Multiply by the monomial c * x^m.
    SparsePoly shifted(const Exponents& m, uint32_t c = 1) const;
    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

    /// Multidegree if homogeneous, nullopt otherwise (zero counts as homogeneous
    /// of any degree and returns nullopt).
    std::optional<Multidegree> homogeneous_degree() const;

    /// Substitute variables: assignment of 0/1 per variable (keep = -1).
    /// Entries set to 0 kill terms, entries set to 1 erase the variable.
    SparsePoly substituted(const std::array<int, 9>& assignment) const;

    uint32_t evaluate(std::span<const uint32_t> point) const;

    std::string str() const;

private:
    WeightMatrix W_;
    PrimeField F_;
    std::map<Exponents, uint32_t> terms_;
};

SparsePoly partial_derivative(const SparsePoly& f, int var);

/// All monomials of one multidegree, in ascending lexicographic order on the
/// exponent vector, with positional lookup.
struct GradedPieceBasis {
    Multidegree degree;
    std::vector<Exponents> monomials;
    std::unordered_map<Exponents, uint32_t, ExponentsHash> index;

    size_t size() const { return monomials.size(); }
    uint32_t position(const Exponents& m) const {
        auto it = index.find(m);
        if (it == index.end()) throw std::out_of_range("GradedPieceBasis: monomial outside the piece");
        return it->second;
    }
};

GradedPieceBasis enumerate_basis(const WeightMatrix& W, const Multidegree& d);

/// Section with an independent uniformly random nonzero coefficient on every
/// basis monomial; deterministic in (prime, seed).
SparsePoly random_section(const WeightMatrix& W, const Multidegree& d, const PrimeField& F,
                          uint64_t seed);

}  // namespace cicy
