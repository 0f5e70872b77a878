#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cicy {

inline uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}

inline uint64_t powmod64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % q == 0) return n == q;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// Arithmetic context for F_p with elements stored as canonical uint32_t in [0, p).
/// Primality is checked at construction.
class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (p < 3 || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not an odd prime");
    }

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((uint64_t)a * b % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        return static_cast<uint32_t>(powmod64(a, e, p_));
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }
    uint32_t reduce_int(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

/// splitmix64; deterministic stream from an explicit seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

    /// Uniform nonzero field element.
    uint32_t nonzero(const PrimeField& F) {
        return static_cast<uint32_t>(below(F.p() - 1)) + 1;
    }

private:
    uint64_t state_;
};

/// F_{p^k} as residues modulo a monic irreducible; elements are coefficient
/// vectors of length k. Irreducibility of the modulus is verified at construction.
class ExtensionField {
public:
    using Elt = std::vector<uint32_t>;

    ExtensionField(PrimeField base, std::vector<uint32_t> monic_modulus);

    const PrimeField& base() const { return F_; }
    size_t degree() const { return k_; }

    Elt zero() const { return Elt(k_, 0); }
    Elt one() const {
        Elt e(k_, 0);
        e[0] = 1;
        return e;
    }
    Elt from_base(uint32_t c) const {
        Elt e(k_, 0);
        e[0] = c;
        return e;
    }
    /// The residue class of x (a root of the modulus).
    Elt generator() const {
        Elt e(k_, 0);
        if (k_ > 1) e[1] = 1; else e[0] = F_.reduce_int(-(long long)mod_[0]);
        return e;
    }

    bool is_zero(const Elt& a) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(Elt a, uint64_t e) const;
    Elt inv(const Elt& a) const;

private:
    PrimeField F_;
    std::vector<uint32_t> mod_;  // monic, degree k_, leading coeff stripped: stores low k_ coeffs
    size_t k_;
};

/// Exact rationals on int64 with gcd normalization; throws on overflow.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

private:
    static Rational make(__int128 n, __int128 d);
    long long num_;
    long long den_;
};

}  // namespace cicy
