#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "endoscope/groups.hpp"

namespace endoscope {

// Counts for the cyclic-Sylow case. lsb = number of l-blocks containing
// simple endotrivial modules; lse = number of isomorphism classes of such
// modules (linear family only; no unitary analogue is available).

namespace detail {

inline SylowProfile require_cyclic(const GroupSpec& spec, long long ell) {
    SylowProfile p = sylow_profile(spec, ell);
    if (p.v == 0) throw std::invalid_argument("blocks: ell does not divide |G|");
    if (!p.cyclic) throw std::invalid_argument("blocks: Sylow ell-subgroups are not cyclic");
    return p;
}

}  // namespace detail

inline long long lsb_sl(int n, long long q, long long ell) {
    GroupSpec spec{Family::SL, n, q};
    SylowProfile p = detail::require_cyclic(spec, ell);
    int d = p.d;
    if (d == 1) {
        if (n != 2) throw internal_error("lsb_sl: d = 1 with cyclic Sylow forces n = 2");
        return q % 2 == 1 ? 2 : 1;
    }
    if (n == d) return static_cast<long long>(big_gcd(Bigint(q - 1), Bigint(n)));
    if (n == d + 2 && q == 2) return 2;
    return q - 1;
}

// |X(H)| = |H/[H,H]|_{l'} for H the Sylow normalizer; lsb = |X(H)|/e with
// inertial index e = d. Kept separate so the product identity is testable.
inline long long x_h_order_sl(int n, long long q, long long ell) {
    GroupSpec spec{Family::SL, n, q};
    SylowProfile p = detail::require_cyclic(spec, ell);
    int d = p.d;
    if (d == 1) throw std::invalid_argument("x_h_order_sl: d > 1 required");
    if (n == d) return static_cast<long long>(big_gcd(Bigint(q - 1), Bigint(d))) * d;
    if (n == d + 2 && q == 2) return 2 * d;
    return d * (q - 1);
}

struct LseResult {
    std::optional<long long> count;  // nullopt = structural star-tree case
    std::string note;
};

inline LseResult lse_sl(int n, long long q, long long ell) {
    if (n <= 2) throw std::invalid_argument("lse_sl: n > 2 required");
    GroupSpec spec{Family::SL, n, q};
    SylowProfile p = detail::require_cyclic(spec, ell);
    int d = p.d;
    if (d <= 1) throw std::invalid_argument("lse_sl: d > 1 required");
    bool doubling = (d == ell - 1) && p.v == 1;  // exceptional multiplicity one
    if (d < n) {
        long long base = (q == 2 && n == d + 2) ? 2 : q - 1;
        return {doubling ? 2 * base : base, "open polygon with exceptional vertex at one end"};
    }
    // d == n
    if (center_order(spec) == 1) return {doubling ? 2 : 1, "principal block only"};
    return {std::nullopt,
            "nontrivial centre: non-principal blocks form a star with the exceptional vertex in the middle "
            "and d/e > 1 equal-length branches; no count is asserted"};
}

inline long long lsb_su(int n, long long q, long long ell) {
    if (n < 3) throw std::invalid_argument("lsb_su: n >= 3 required");
    GroupSpec spec{Family::SU, n, q};
    if (su_excluded_case(spec)) throw std::invalid_argument("lsb_su: SU_3(2) is solvable and excluded");
    SylowProfile p = detail::require_cyclic(spec, ell);
    int d = p.d;
    if (d <= 1) throw internal_error("lsb_su: d > 1 is forced for n > 2");
    if (n == d) return static_cast<long long>(big_gcd(Bigint(q + 1), Bigint(n)));
    if (n == d + 2 && q == 2) return 6;
    return q + 1;
}

inline long long x_h_order_su(int n, long long q, long long ell) {
    GroupSpec spec{Family::SU, n, q};
    SylowProfile p = detail::require_cyclic(spec, ell);
    int d = p.d;
    if (d == n) return static_cast<long long>(big_gcd(Bigint(q + 1), Bigint(d))) * d;
    if (n == d + 2 && q == 2) return 6 * d;
    return d * (q + 1);
}

}  // namespace endoscope
