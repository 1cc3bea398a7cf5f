#pragma once

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "endoscope/numtheory.hpp"
#include "endoscope/polynomial.hpp"

namespace endoscope {

// d-th cyclotomic polynomial, from x^d - 1 = prod_{e|d} Phi_e by exact
// division. Cached; safe for concurrent readers.
inline IntPolynomial cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be >= 1");
    static std::map<int, IntPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    auto compute = [&](auto&& self, int m) -> IntPolynomial {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        IntPolynomial p = IntPolynomial::x_power_minus_one(m);
        for (int e = 1; e < m; ++e) {
            if (m % e == 0) p = p.exact_divide(self(self, e));
        }
        cache.emplace(m, p);
        return p;
    };
    return compute(compute, d);
}

// Gaussian binomial [n, k]_x = prod_{i=1}^k (x^{n-k+i}-1)/(x^i-1).
// Every partial product is again a q-binomial, so each division is exact.
inline IntPolynomial gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("gaussian_binomial: need 0 <= k <= n");
    IntPolynomial r = IntPolynomial::one();
    for (int i = 1; i <= k; ++i) {
        r *= IntPolynomial::x_power_minus_one(n - k + i);
        r = r.exact_divide(IntPolynomial::x_power_minus_one(i));
    }
    return r;
}

// Residue of [hd-1, d-1]_x - x^{(h-1) d(d-1)/2} modulo Phi_d(x)^2. A zero
// residue certifies the q-Babbage congruence; the residue itself is
// returned so the failing cases stay inspectable. The unsigned congruence
// holds exactly when d or h is odd: at a primitive d-th root of unity the
// left side is 1 (q-Lucas) while the right side is (-1)^{(h-1)(d-1)}, so
// for d, h both even the true identity carries that sign (see
// andrews_residue_signed), with (d,h) = (2,2) the smallest failing pair.
inline IntPolynomial andrews_residue(int d, int h) {
    if (d < 2 || h < 2) throw std::invalid_argument("andrews_residue: need d,h >= 2");
    IntPolynomial lhs = gaussian_binomial(h * d - 1, d - 1);
    int shift = (h - 1) * (d * (d - 1) / 2);
    lhs -= IntPolynomial::monomial(shift);
    IntPolynomial phi = cyclotomic(d);
    return lhs.mod(phi * phi);
}

// Residue of [hd-1, d-1]_x - (-1)^{(h-1)(d-1)} x^{(h-1) d(d-1)/2} modulo
// Phi_d(x)^2: the sign-corrected congruence, which vanishes for all
// d, h >= 2.
inline IntPolynomial andrews_residue_signed(int d, int h) {
    if (d < 2 || h < 2) throw std::invalid_argument("andrews_residue_signed: need d,h >= 2");
    IntPolynomial lhs = gaussian_binomial(h * d - 1, d - 1);
    int shift = (h - 1) * (d * (d - 1) / 2);
    Bigint sign = ((h - 1) * (d - 1)) % 2 == 0 ? 1 : -1;
    lhs -= IntPolynomial::monomial(shift, sign);
    IntPolynomial phi = cyclotomic(d);
    return lhs.mod(phi * phi);
}

// All primes r with mult_order(q, r) = e, i.e. Zsigmondy primes for (q, e)
// together with e's "non-primitive" divisors of Phi_e(q) filtered out.
inline std::set<Bigint> zsigmondy_primes(long long q, int e) {
    if (q < 2) throw std::invalid_argument("zsigmondy_primes: q must be >= 2");
    if (e < 1) throw std::invalid_argument("zsigmondy_primes: e must be >= 1");
    Bigint value = cyclotomic(e).eval(Bigint(q));
    std::set<Bigint> out;
    if (value == 0) return out;
    for (const auto& [p, mult] : factorize(value)) {
        (void)mult;
        if (Bigint(q) % p == 0) continue;
        if (mult_order(Bigint(q), p) == e) out.insert(p);
    }
    return out;
}

}  // namespace endoscope
