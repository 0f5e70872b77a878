// scratch benchmark, not part of the suite
#include <chrono>
#include <cstdio>

#include "cicy/poly.hpp"
#include "cicy/rank.hpp"

using namespace cicy;

int main(int argc, char** argv) {
    int n = argc > 1 ? atoi(argv[1]) : 4;
    ScrollData data(0, {0, 0, 0, 0, 0});
    auto G = WeightMatrix::cayley(data);
    PrimeField F(32003);

    auto t0 = std::chrono::steady_clock::now();
    auto f1 = random_section(WeightMatrix::scroll(data), {0, 2}, F, 1);
    auto f2 = random_section(WeightMatrix::scroll(data), {2, 3}, F, 1);
    // lift to 9 variables and form y1 f1 + y2 f2
    SparsePoly Fc(G, F);
    for (auto& [m, c] : f1.terms()) {
        Exponents e = m;
        e[7] = 1;
        Fc.add_term(e, c);
    }
    for (auto& [m, c] : f2.terms()) {
        Exponents e = m;
        e[8] = 1;
        Fc.add_term(e, c);
    }
    printf("F terms: %zu deg ok: %d\n", Fc.term_count(),
           Fc.homogeneous_degree() == Multidegree(0, 0, 1));

    std::vector<SparsePoly> gens;
    for (int v = 0; v < 9; ++v) {
        auto g = partial_derivative(Fc, v).shifted(Exponents::unit(v));
        if (!g.is_zero()) gens.push_back(g);
    }
    printf("generators: %zu\n", gens.size());

    auto Bn = enumerate_basis(G, {0, 0, n});
    auto Bm = enumerate_basis(G, {0, 0, n - 1});
    printf("dim S_n = %zu, dim S_{n-1} = %zu, cols = %zu\n", Bn.size(), Bm.size(),
           Bm.size() * gens.size());

    RankEngine eng((uint32_t)Bn.size(), F);
    std::vector<SparseEntry> col;
    for (auto& g : gens) {
        for (auto& m : Bm.monomials) {
            col.clear();
            for (auto& [gm, gc] : g.terms()) col.emplace_back(Bn.position(gm + m), gc);
            eng.add_column(col);
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    printf("assembly: %.2f s\n", std::chrono::duration<double>(t1 - t0).count());
    uint64_t r = eng.rank();
    auto t2 = std::chrono::steady_clock::now();
    printf("rank = %llu, corank = %llu, time %.2f s\n", (unsigned long long)r,
           (unsigned long long)eng.corank(), std::chrono::duration<double>(t2 - t1).count());
    return 0;
}
