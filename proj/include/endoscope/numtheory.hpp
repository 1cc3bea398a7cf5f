#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "endoscope/bigint.hpp"
#include "endoscope/errors.hpp"

namespace endoscope {

// Largest v with ell^v | N. N must be nonzero.
inline int l_valuation(Bigint n, const Bigint& ell) {
    if (n == 0) throw std::invalid_argument("l_valuation: N must be nonzero");
    if (ell < 2) throw std::invalid_argument("l_valuation: modulus must be >= 2");
    if (n < 0) n = -n;
    int v = 0;
    while (n % ell == 0) {
        n /= ell;
        ++v;
    }
    return v;
}

inline const std::vector<long long>& small_primes() {
    static const std::vector<long long> primes = [] {
        const int bound = 1'000'000;
        std::vector<bool> sieve(bound + 1, true);
        sieve[0] = sieve[1] = false;
        for (long long i = 2; i * i <= bound; ++i)
            if (sieve[static_cast<size_t>(i)])
                for (long long j = i * i; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
        std::vector<long long> out;
        for (long long i = 2; i <= bound; ++i)
            if (sieve[static_cast<size_t>(i)]) out.push_back(i);
        return out;
    }();
    return primes;
}

namespace detail {

inline Bigint mod_pow(Bigint base, Bigint exp, const Bigint& mod) {
    Bigint r = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if ((exp & 1) != 0) r = (r * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return r;
}

inline bool miller_rabin_round(const Bigint& n, const Bigint& a, const Bigint& d, int s) {
    Bigint x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

// Deterministic for n < 3.3e24 via the standard 13-base Miller-Rabin set;
// inputs here stay far below that after trial division.
inline bool is_prime(const Bigint& n) {
    if (n < 2) return false;
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Bigint d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (!detail::miller_rabin_round(n, Bigint(a), d, s)) return false;
    }
    return true;
}

namespace detail {

inline Bigint pollard_rho(const Bigint& n) {
    if (n % 2 == 0) return 2;
    for (Bigint c = 1;; ++c) {
        Bigint x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Bigint diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            d = big_gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

}  // namespace detail

// Prime factorization: trial division up to 1e6, then Miller-Rabin plus
// Pollard rho on what remains.
inline std::map<Bigint, int> factorize(Bigint n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    std::map<Bigint, int> out;
    for (long long p : small_primes()) {
        if (Bigint(p) * p > n) break;
        while (n % p == 0) {
            ++out[Bigint(p)];
            n /= p;
        }
    }
    auto rec = [&](auto&& self, const Bigint& m) -> void {
        if (m == 1) return;
        if (is_prime(m)) {
            ++out[m];
            return;
        }
        Bigint d = detail::pollard_rho(m);
        self(self, d);
        self(self, m / d);
    };
    rec(rec, n);
    return out;
}

// Least d >= 1 with a^d = 1 (mod ell); ell must be prime and coprime to a.
inline int mult_order(Bigint a, const Bigint& ell) {
    if (!is_prime(ell)) throw std::invalid_argument("mult_order: modulus must be prime");
    a %= ell;
    if (a < 0) a += ell;
    if (a == 0) throw std::invalid_argument("mult_order: base divisible by modulus");
    Bigint x = a;
    int d = 1;
    while (x != 1) {
        x = (x * a) % ell;
        ++d;
        if (Bigint(d) >= ell) throw internal_error("mult_order: no order found (modulus not prime?)");
    }
    return d;
}

inline bool is_prime_power(long long q) {
    if (q < 2) return false;
    auto f = factorize(Bigint(q));
    return f.size() == 1;
}

// The (q, ell, d) triple the screens run against: ell an odd prime not
// dividing q, and d the multiplicative order of q (untwisted) or -q
// (unitary convention) modulo ell.
struct ArithContext {
    long long q;
    long long ell;
    int d;
};

inline ArithContext make_arith_context(long long q, long long ell, bool unitary = false) {
    if (ell < 3 || !is_prime(Bigint(ell))) throw std::invalid_argument("arith context: ell must be an odd prime");
    if (q < 2 || q % ell == 0) throw std::invalid_argument("arith context: need q >= 2 with ell not dividing q");
    return {q, ell, mult_order(Bigint(unitary ? -q : q), Bigint(ell))};
}

}  // namespace endoscope
