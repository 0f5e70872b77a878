#pragma once

#include <map>
#include <vector>

#include "cicy/field.hpp"

namespace cicy {

/// Dense univariate polynomial over F_p, coefficients low-to-high, no trailing
/// zeros. The empty vector is the zero polynomial.
struct UniPoly {
    std::vector<uint32_t> c;

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    uint32_t lead() const { return c.back(); }
    static UniPoly x() { return {{0, 1}}; }
    bool operator==(const UniPoly& o) const { return c == o.c; }
};

void uni_trim(UniPoly& f);
UniPoly uni_add(const UniPoly& a, const UniPoly& b, const PrimeField& F);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b, const PrimeField& F);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b, const PrimeField& F);
UniPoly uni_monic(UniPoly f, const PrimeField& F);
/// Remainder and exact quotient of division by a nonzero divisor.
std::pair<UniPoly, UniPoly> uni_divmod(UniPoly f, const UniPoly& g, const PrimeField& F);
UniPoly uni_mod(UniPoly f, const UniPoly& g, const PrimeField& F);
UniPoly uni_derivative(const UniPoly& f, const PrimeField& F);
uint32_t uni_eval(const UniPoly& f, uint32_t x, const PrimeField& F);
/// Monic gcd; gcd(f, 0) = monic f.
UniPoly uni_gcd(UniPoly a, UniPoly b, const PrimeField& F);
UniPoly uni_powmod(UniPoly base, uint64_t e, const UniPoly& m, const PrimeField& F);

/// Largest squarefree divisor (monic). Handles p-th power content.
UniPoly squarefree_part(const UniPoly& f, const PrimeField& F);

/// For the squarefree part of f: map d -> total degree of the product of the
/// irreducible factors of degree d. Values sum to deg(squarefree_part(f)).
std::map<int, int> distinct_degree_factorization(const UniPoly& f, const PrimeField& F);

/// Roots in F_p, ascending, of the squarefree part (each root once).
std::vector<uint32_t> rational_roots(const UniPoly& f, const PrimeField& F);

}  // namespace cicy
