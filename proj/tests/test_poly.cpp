#include <doctest.h>

#include <set>

#include "cicy/poly.hpp"

using namespace cicy;

namespace {

// Independent bounded enumeration: scan candidate exponent boxes and keep the
// monomials whose multidegree matches. Deliberately dumb.
size_t brute_count(const WeightMatrix& W, const Multidegree& d) {
    int fibre_bound = 16;  // > max fibre degree used in tests
    int base_bound = 26;
    std::set<Exponents> found;
    auto consider = [&](Exponents& m) {
        for (int e6 = 0; e6 < base_bound; ++e6)
            for (int e7 = 0; e7 < base_bound; ++e7) {
                m[5] = (uint8_t)e6;
                m[6] = (uint8_t)e7;
                if (monomial_multidegree(W, std::span<const uint8_t>(m.e.data(), W.nvars)) == d)
                    found.insert(m);
            }
        m[5] = m[6] = 0;
    };
    Exponents m;
    for (int q1 = 0; q1 < fibre_bound; ++q1)
        for (int q2 = 0; q2 + q1 < fibre_bound; ++q2)
            for (int q3 = 0; q3 + q2 + q1 < fibre_bound; ++q3)
                for (int q4 = 0; q4 + q3 + q2 + q1 < fibre_bound; ++q4)
                    for (int q5 = 0; q5 + q4 + q3 + q2 + q1 < fibre_bound; ++q5) {
                        m[0] = (uint8_t)q1;
                        m[1] = (uint8_t)q2;
                        m[2] = (uint8_t)q3;
                        m[3] = (uint8_t)q4;
                        m[4] = (uint8_t)q5;
                        if (W.rows == 2) {
                            // fibre degree must match before scanning base exponents
                            if (q1 + q2 + q3 + q4 + q5 != d[1]) continue;
                            consider(m);
                        } else {
                            for (int g1 = 0; g1 <= d[2]; ++g1) {
                                int g2 = d[2] - g1;
                                m[7] = (uint8_t)g1;
                                m[8] = (uint8_t)g2;
                                int fibre = d[1] + 2 * g1 + 3 * g2;
                                if (q1 + q2 + q3 + q4 + q5 != fibre) continue;
                                consider(m);
                            }
                            m[7] = m[8] = 0;
                        }
                    }
    return found.size();
}

}  // namespace

TEST_CASE("graded piece dimensions match brute enumeration") {
    ScrollData f1(0, {0, 0, 0, 0, 0});
    auto W = WeightMatrix::scroll(f1);

    auto b02 = enumerate_basis(W, {0, 2});
    CHECK(b02.size() == 15);
    CHECK(brute_count(W, {0, 2}) == 15);

    auto b23 = enumerate_basis(W, {2, 3});
    CHECK(b23.size() == 105);
    CHECK(brute_count(W, {2, 3}) == 105);

    ScrollData f12(0, {0, 0, 1, 1, 1});
    auto W12 = WeightMatrix::scroll(f12);
    auto bm12 = enumerate_basis(W12, {-1, 2});
    CHECK(bm12.size() == 18);
    CHECK(brute_count(W12, {-1, 2}) == 18);

    // scattered small cases against brute force
    ScrollData g(-2, {0, 0, 0, 2, 2});
    auto Wg = WeightMatrix::scroll(g);
    for (int d1 = -4; d1 <= 2; ++d1)
        for (int d2 = 1; d2 <= 3; ++d2)
            CHECK(enumerate_basis(Wg, {d1, d2}).size() == brute_count(Wg, {d1, d2}));
}

TEST_CASE("basis is sorted, duplicate-free, indexed") {
    ScrollData data(-1, {0, 0, 0, 1, 2});
    auto W = WeightMatrix::scroll(data);
    auto B = enumerate_basis(W, {-1, 2});
    REQUIRE(!B.monomials.empty());
    for (size_t i = 1; i < B.monomials.size(); ++i) CHECK(B.monomials[i - 1] < B.monomials[i]);
    for (uint32_t i = 0; i < B.size(); ++i) CHECK(B.position(B.monomials[i]) == i);
    for (auto& m : B.monomials)
        CHECK(monomial_multidegree(W, std::span<const uint8_t>(m.e.data(), 7)) == B.degree);
}

TEST_CASE("cayley graded piece of the trivial scroll") {
    ScrollData data(0, {0, 0, 0, 0, 0});
    auto G = WeightMatrix::cayley(data);
    CHECK(enumerate_basis(G, {0, 0, 4}).size() == 33580);
    CHECK(enumerate_basis(G, {0, 0, 5}).size() == 101032);
}

TEST_CASE("random sections are deterministic with full realizable support") {
    ScrollData data(0, {0, 0, 0, 0, 0});
    auto W = WeightMatrix::scroll(data);
    PrimeField F(101);
    auto f = random_section(W, {0, 2}, F, 7);
    auto g = random_section(W, {0, 2}, F, 7);
    CHECK(f == g);
    CHECK(f.term_count() == 15);
    CHECK(f.homogeneous_degree() == Multidegree(0, 2));
    auto h = random_section(W, {0, 2}, F, 8);
    CHECK(!(f == h));

    // support of a section of (-3, 2) on F(0,0,1,2,2) is exactly the
    // realizable monomials
    ScrollData row8(-3, {0, 0, 1, 2, 2});
    auto W8 = WeightMatrix::scroll(row8);
    auto q = random_section(W8, {-3, 2}, F, 3);
    auto B8 = enumerate_basis(W8, {-3, 2});
    CHECK(q.term_count() == B8.size());
    for (auto& m : B8.monomials) CHECK(q.coeff(m) != 0);

    CHECK_THROWS(random_section(W8, {-9, 2}, F, 1));  // empty piece
}

TEST_CASE("partial derivative bookkeeping") {
    ScrollData data(0, {0, 0, 0, 0, 0});
    auto W = WeightMatrix::scroll(data);
    PrimeField F(101);

    SparsePoly f(W, F);
    Exponents x4sq;
    x4sq[3] = 2;
    f.add_term(x4sq, 1);
    auto df = partial_derivative(f, 3);
    Exponents x4;
    x4[3] = 1;
    CHECK(df.term_count() == 1);
    CHECK(df.coeff(x4) == 2);

    SparsePoly g(W, F);
    Exponents x1x6;
    x1x6[0] = 1;
    x1x6[5] = 1;
    g.add_term(x1x6, 5);
    CHECK(partial_derivative(g, 6).is_zero());

    // degree subtraction on the rank-3 matrix: d/dy1 drops (0,-2,1)
    auto G = WeightMatrix::cayley(data);
    SparsePoly h(G, F);
    Exponents m;
    m[0] = 2;  // x1^2, fibre degree 2
    m[7] = 1;  // y1
    h.add_term(m, 3);
    REQUIRE(h.homogeneous_degree() == Multidegree(0, 0, 1));
    auto dh = partial_derivative(h, 7);
    CHECK(dh.homogeneous_degree() == Multidegree(0, 2, 0));
}

TEST_CASE("product degrees add for homogeneous polynomials") {
    ScrollData data(-1, {0, 0, 0, 1, 1});
    auto W = WeightMatrix::scroll(data);
    PrimeField F(101);
    auto f = random_section(W, {-1, 2}, F, 1);
    auto g = random_section(W, {1, 3}, F, 2);
    auto fg = f * g;
    CHECK(fg.homogeneous_degree() == Multidegree(0, 5));
}

TEST_CASE("substitution kills and erases variables") {
    ScrollData data(0, {0, 0, 0, 0, 0});
    auto W = WeightMatrix::scroll(data);
    PrimeField F(101);
    SparsePoly f(W, F);
    Exponents a, b;
    a[0] = 1;
    a[3] = 1;  // x1 x4
    b[1] = 2;  // x2^2
    f.add_term(a, 4);
    f.add_term(b, 9);
    std::array<int, 9> assign;
    assign.fill(-1);
    assign[3] = 0;  // x4 -> 0
    assign[1] = 1;  // x2 -> 1
    auto g = f.substituted(assign);
    CHECK(g.term_count() == 1);
    Exponents unit;
    CHECK(g.coeff(unit) == 9);
}
