#include "cicy/grading.hpp"

#include <cassert>

namespace cicy {

std::string Multidegree::str() const {
    std::string s = "(";
    for (int i = 0; i < rank; ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

ScrollData::ScrollData(int p_, std::array<int, 5> a_, std::pair<int, int> fd)
    : p(p_), a(a_), fibre_degrees(fd) {
    if (a[0] != 0) throw std::invalid_argument("ScrollData: a1 must be 0");
    for (int j = 1; j < 5; ++j)
        if (a[j] < a[j - 1]) throw std::invalid_argument("ScrollData: weights must be sorted ascending");
    if (fd != std::pair<int, int>{2, 3})
        throw std::invalid_argument("ScrollData: only fibre degrees (2,3) are supported");
}

std::string ScrollData::str() const {
    std::string s = "(p=" + std::to_string(p) + "; a=";
    for (int j = 0; j < 5; ++j) s += std::to_string(a[j]);
    return s + ")";
}

WeightMatrix WeightMatrix::scroll(const ScrollData& data) {
    WeightMatrix W;
    W.rows = 2;
    W.nvars = 7;
    for (int j = 0; j < 5; ++j) W.cols[j] = {-data.a[j], 1, 0};
    W.cols[5] = {1, 0, 0};
    W.cols[6] = {1, 0, 0};
    return W;
}

WeightMatrix WeightMatrix::cayley(const ScrollData& data) {
    WeightMatrix W;
    W.rows = 3;
    W.nvars = 9;
    for (int j = 0; j < 5; ++j) W.cols[j] = {-data.a[j], 1, 0};
    W.cols[5] = {1, 0, 0};
    W.cols[6] = {1, 0, 0};
    // y-columns carry minus the section degrees plus the bundle grading
    W.cols[7] = {-data.p, -2, 1};
    W.cols[8] = {-2 + data.p + data.sum_a(), -3, 1};
    return W;
}

std::string WeightMatrix::var_name(int v) const {
    if (v < 7) return "x" + std::to_string(v + 1);
    return "y" + std::to_string(v - 6);
}

Multidegree monomial_multidegree(const WeightMatrix& W, std::span<const uint8_t> expo) {
    if ((int)expo.size() != W.nvars)
        throw std::invalid_argument("monomial_multidegree: exponent length mismatch");
    Multidegree d = W.rows == 2 ? Multidegree{0, 0} : Multidegree{0, 0, 0};
    for (int v = 0; v < W.nvars; ++v)
        for (int r = 0; r < W.rows; ++r) d.d[r] += (int)expo[v] * W.cols[v][r];
    return d;
}

Multidegree anticanonical(const ScrollData& data) { return {2 - data.sum_a(), 5}; }

int coefficient_degree_quadric(std::span<const int> q, const ScrollData& data) {
    int total = 0, dot = 0;
    for (size_t j = 0; j < 5; ++j) {
        if (q[j] < 0) throw std::invalid_argument("coefficient_degree_quadric: negative exponent");
        total += q[j];
        dot += q[j] * data.a[j];
    }
    if (total != 2) throw std::invalid_argument("coefficient_degree_quadric: exponents must sum to 2");
    return data.p + dot;
}

int coefficient_degree_cubic(std::span<const int> q, const ScrollData& data) {
    int total = 0, dot = 0;
    for (size_t j = 0; j < 5; ++j) {
        total += q[j];
        dot += (q[j] - 1) * data.a[j];
    }
    if (total != 3) throw std::invalid_argument("coefficient_degree_cubic: exponents must sum to 3");
    return 2 - data.p + dot;
}

int BaseLocus::dim() const {
    if (no_sections) throw std::logic_error("BaseLocus: no sections, dimension undefined");
    if (k == 1) return -1;
    int d = k - 1;
    assert(d != 0);
    return d;
}

std::string BaseLocus::str() const {
    if (no_sections) return "no-sections";
    if (k == 1) return "empty";
    std::string s = "V(";
    for (int j = k; j <= 5; ++j) {
        if (j > k) s += ",";
        s += "x" + std::to_string(j);
    }
    return s + ")";
}

BaseLocus base_locus(const Multidegree& d, const std::array<int, 5>& a) {
    if (d.rank != 2 || d[1] <= 0) throw std::invalid_argument("base_locus: need rank-2 degree with d2 > 0");
    for (int j = 1; j < 5; ++j)
        if (a[j] < a[j - 1]) throw std::invalid_argument("base_locus: weights must be sorted");
    BaseLocus B;
    int k = 6;
    for (int j = 0; j < 5; ++j) {
        if (d[0] + d[1] * a[j] >= 0) { k = j + 1; break; }
    }
    B.k = k;
    if (k == 6) {
        B.no_sections = true;
        return B;
    }
    for (int j = k; j <= 5; ++j) B.vanishing[j - 1] = true;
    return B;
}

}  // namespace cicy
