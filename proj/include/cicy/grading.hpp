#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cicy {

/// Degree vector under a weight matrix; rank 2 for scrolls, rank 3 for the
/// Cayley bundle. Unused trailing entries stay zero.
struct Multidegree {
    int rank = 2;
    std::array<int, 3> d{0, 0, 0};

    Multidegree() = default;
    Multidegree(int d1, int d2) : rank(2), d{d1, d2, 0} {}
    Multidegree(int d1, int d2, int d3) : rank(3), d{d1, d2, d3} {}

    int operator[](int i) const { return d[i]; }
    bool operator==(const Multidegree& o) const { return rank == o.rank && d == o.d; }
    bool operator!=(const Multidegree& o) const { return !(*this == o); }
    bool operator<(const Multidegree& o) const {
        if (rank != o.rank) return rank < o.rank;
        return d < o.d;
    }
    Multidegree operator+(const Multidegree& o) const {
        if (rank != o.rank) throw std::invalid_argument("Multidegree: rank mismatch");
        Multidegree r = *this;
        for (int i = 0; i < rank; ++i) r.d[i] += o.d[i];
        return r;
    }
    Multidegree operator-(const Multidegree& o) const {
        if (rank != o.rank) throw std::invalid_argument("Multidegree: rank mismatch");
        Multidegree r = *this;
        for (int i = 0; i < rank; ++i) r.d[i] -= o.d[i];
        return r;
    }
    std::string str() const;
};

/// Classification datum (p; a1..a5) of a fibration by (2,3) complete
/// intersections in a fivefold scroll. Validates the normalization
/// a1 = 0 <= a2 <= ... <= a5 at construction.
struct ScrollData {
    int p = 0;
    std::array<int, 5> a{0, 0, 0, 0, 0};
    std::pair<int, int> fibre_degrees{2, 3};

    ScrollData() = default;
    ScrollData(int p_, std::array<int, 5> a_, std::pair<int, int> fd = {2, 3});

    int sum_a() const { return a[0] + a[1] + a[2] + a[3] + a[4]; }
    /// Degree of the quadric-system sections: (p, 2).
    Multidegree deg_quadric() const { return {p, fibre_degrees.first}; }
    /// Degree of the cubic-system sections: (2 - p - sum_a, 3).
    Multidegree deg_cubic() const { return {2 - p - sum_a(), fibre_degrees.second}; }
    std::string str() const;
    bool operator==(const ScrollData& o) const { return p == o.p && a == o.a; }
    bool operator<(const ScrollData& o) const {
        if (p != o.p) return p < o.p;
        return a < o.a;
    }
};

/// Column-weight matrix of a rank-2 or rank-3 toric quotient. Variables are
/// ordered x1..x5, x6, x7 and, in rank 3, y1, y2.
struct WeightMatrix {
    int rows = 2;
    int nvars = 7;
    // column j = degree vector of variable j
    std::array<std::array<int, 3>, 9> cols{};

    static WeightMatrix scroll(const ScrollData& data);
    static WeightMatrix cayley(const ScrollData& data);

    Multidegree var_degree(int v) const {
        if (rows == 2) return {cols[v][0], cols[v][1]};
        return {cols[v][0], cols[v][1], cols[v][2]};
    }
    std::string var_name(int v) const;
    bool operator==(const WeightMatrix& o) const {
        return rows == o.rows && nvars == o.nvars && cols == o.cols;
    }
};

/// deg(prod_i x_i^{q_i}) = sum_i q_i * deg(x_i).
Multidegree monomial_multidegree(const WeightMatrix& W, std::span<const uint8_t> expo);

/// (2 - sum_a, 5).
Multidegree anticanonical(const ScrollData& data);

/// Degree in (x6,x7) of the coefficient of the fibre monomial x^q inside a
/// section of the quadric system: p + sum q_j a_j. Negative means absent.
int coefficient_degree_quadric(std::span<const int> q, const ScrollData& data);

/// Same for the cubic system: 2 - p + sum (q_j - 1) a_j.
int coefficient_degree_cubic(std::span<const int> q, const ScrollData& data);

/// Base locus of the system of a degree (d1, d2) with d2 > 0 on the scroll
/// with sorted weights a. The locus is V(x_k, ..., x5) where
/// k = min { j : d1 + d2*a_j >= 0 }; empty when k = 1, and k = 6 encodes an
/// empty linear system (no realizable monomial at all).
struct BaseLocus {
    int k = 1;
    bool no_sections = false;
    std::array<bool, 5> vanishing{};  // vanishing[j] <=> x_{j+1} in the vanishing set

    bool empty() const { return k == 1 && !no_sections; }
    /// -1 when empty; otherwise k - 1 (never 0).
    int dim() const;
    std::string str() const;
};

BaseLocus base_locus(const Multidegree& d, const std::array<int, 5>& a);

}  // namespace cicy
