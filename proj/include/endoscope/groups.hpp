#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "endoscope/cyclotomic.hpp"
#include "endoscope/numtheory.hpp"
#include "endoscope/partition.hpp"
#include "endoscope/polynomial.hpp"

namespace endoscope {

enum class Family { SL, SU, GL, GU, G2, D4t3, F4, E6, E6t2, E7, E8, F4t2 };

inline bool is_linear_unitary(Family f) {
    return f == Family::SL || f == Family::SU || f == Family::GL || f == Family::GU;
}

inline bool is_twisted_unitary_like(Family f) { return f == Family::SU || f == Family::GU; }

inline std::string family_name(Family f) {
    switch (f) {
        case Family::SL: return "sl";
        case Family::SU: return "su";
        case Family::GL: return "gl";
        case Family::GU: return "gu";
        case Family::G2: return "g2";
        case Family::D4t3: return "3d4";
        case Family::F4: return "f4";
        case Family::E6: return "e6";
        case Family::E6t2: return "2e6";
        case Family::E7: return "e7";
        case Family::E8: return "e8";
        case Family::F4t2: return "2f4";
    }
    return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
    static const std::map<std::string, Family> names = {
        {"sl", Family::SL}, {"su", Family::SU}, {"gl", Family::GL},   {"gu", Family::GU},
        {"g2", Family::G2}, {"3d4", Family::D4t3}, {"f4", Family::F4}, {"e6", Family::E6},
        {"2e6", Family::E6t2}, {"e7", Family::E7}, {"e8", Family::E8}, {"2f4", Family::F4t2}};
    auto it = names.find(s);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

// Group specification. n is the rank parameter for the linear/unitary
// families and ignored otherwise. For 2F4 the q field stores the order
// parameter itself (the square of the defining parameter), so the order
// polynomial below is a polynomial in that parameter.
struct GroupSpec {
    Family family = Family::SL;
    int n = 0;
    long long q = 2;
};

inline void validate_spec(const GroupSpec& spec) {
    if (spec.q < 2 || !is_prime_power(spec.q)) throw std::invalid_argument("q must be a prime power >= 2");
    if (is_linear_unitary(spec.family) && spec.n < 2)
        throw std::invalid_argument("linear/unitary families require n >= 2");
}

// True for the solvable case SU_3(2) that the classification excludes.
inline bool su_excluded_case(const GroupSpec& spec) {
    return spec.family == Family::SU && spec.n == 3 && spec.q == 2;
}

// |G| in the factored form q^N * prod_d Phi_d(q)^{m_d}. The natural_factors
// list keeps the per-family (q^i -+ 1) shape for display.
struct GroupOrder {
    int q_exponent = 0;
    std::map<int, int> phi;
    std::vector<IntPolynomial> natural_factors;

    Bigint eval(long long q) const {
        Bigint v = big_pow(Bigint(q), static_cast<unsigned>(q_exponent));
        for (const auto& [d, m] : phi) v *= big_pow(cyclotomic(d).eval(Bigint(q)), static_cast<unsigned>(m));
        return v;
    }

    IntPolynomial prime_to_p_part_poly() const {
        IntPolynomial p = IntPolynomial::one();
        for (const auto& [d, m] : phi)
            for (int i = 0; i < m; ++i) p *= cyclotomic(d);
        return p;
    }

    int phi_multiplicity(int d) const {
        auto it = phi.find(d);
        return it == phi.end() ? 0 : it->second;
    }
};

namespace detail {

// q^i - 1 = prod_{d | i} Phi_d.
inline void add_untwisted_factor(GroupOrder& order, int i) {
    for (int d = 1; d <= i; ++d)
        if (i % d == 0) ++order.phi[d];
    order.natural_factors.push_back(IntPolynomial::x_power_minus_one(i));
}

// q^i + 1 = prod_{d | 2i, d !| i} Phi_d.
inline void add_plus_factor(GroupOrder& order, int i) {
    for (int d = 1; d <= 2 * i; ++d)
        if ((2 * i) % d == 0 && i % d != 0) ++order.phi[d];
    order.natural_factors.push_back(IntPolynomial::x_power_plus_one(i));
}

// q^i - (-1)^i, the twisted (unitary) factor.
inline void add_twisted_factor(GroupOrder& order, int i) {
    if (i % 2 == 0)
        add_untwisted_factor(order, i);
    else
        add_plus_factor(order, i);
}

inline GroupOrder reflection_degrees_order(const std::vector<int>& degrees) {
    GroupOrder order;
    for (int d : degrees) {
        order.q_exponent += d - 1;
        add_untwisted_factor(order, d);
    }
    return order;
}

}  // namespace detail

inline GroupOrder order_formula(const GroupSpec& spec) {
    validate_spec(spec);
    GroupOrder order;
    switch (spec.family) {
        case Family::SL:
        case Family::GL: {
            int from = spec.family == Family::GL ? 1 : 2;
            order.q_exponent = spec.n * (spec.n - 1) / 2;
            for (int i = from; i <= spec.n; ++i) detail::add_untwisted_factor(order, i);
            return order;
        }
        case Family::SU:
        case Family::GU: {
            int from = spec.family == Family::GU ? 1 : 2;
            order.q_exponent = spec.n * (spec.n - 1) / 2;
            for (int i = from; i <= spec.n; ++i) detail::add_twisted_factor(order, i);
            return order;
        }
        case Family::G2: return detail::reflection_degrees_order({2, 6});
        case Family::F4: return detail::reflection_degrees_order({2, 6, 8, 12});
        case Family::E6: return detail::reflection_degrees_order({2, 5, 6, 8, 9, 12});
        case Family::E7: return detail::reflection_degrees_order({2, 6, 8, 10, 12, 14, 18});
        case Family::E8: return detail::reflection_degrees_order({2, 8, 12, 14, 18, 20, 24, 30});
        case Family::D4t3: {
            // (q^2-1)(q^6-1)(q^8+q^4+1), q-power 12
            order.q_exponent = 12;
            detail::add_untwisted_factor(order, 2);
            detail::add_untwisted_factor(order, 6);
            for (int d : {3, 6, 12}) ++order.phi[d];
            IntPolynomial f = cyclotomic(3) * cyclotomic(6) * cyclotomic(12);
            order.natural_factors.push_back(f);
            return order;
        }
        case Family::E6t2: {
            // (q^2-1)(q^5+1)(q^6-1)(q^8-1)(q^9+1)(q^12-1), q-power 36
            order.q_exponent = 36;
            detail::add_untwisted_factor(order, 2);
            detail::add_plus_factor(order, 5);
            detail::add_untwisted_factor(order, 6);
            detail::add_untwisted_factor(order, 8);
            detail::add_plus_factor(order, 9);
            detail::add_untwisted_factor(order, 12);
            return order;
        }
        case Family::F4t2: {
            // In the order parameter Q: (Q-1)(Q^3+1)(Q^4-1)(Q^6+1), Q^12.
            order.q_exponent = 12;
            detail::add_untwisted_factor(order, 1);
            detail::add_plus_factor(order, 3);
            detail::add_untwisted_factor(order, 4);
            detail::add_plus_factor(order, 6);
            return order;
        }
    }
    throw internal_error("order_formula: unhandled family");
}

inline Bigint group_order(const GroupSpec& spec) { return order_formula(spec).eval(spec.q); }

// |Z(SL_n(q))| = gcd(n, q-1), |Z(SU_n(q))| = gcd(n, q+1). Exceptional
// centers are out of scope here.
inline Bigint center_order(const GroupSpec& spec) {
    validate_spec(spec);
    if (spec.family == Family::SL) return big_gcd(Bigint(spec.n), Bigint(spec.q - 1));
    if (spec.family == Family::SU) return big_gcd(Bigint(spec.n), Bigint(spec.q + 1));
    throw std::invalid_argument("center_order: only SL and SU supported");
}

inline int phi_multiplicity(const GroupSpec& spec, int d) {
    if (d < 1) throw std::invalid_argument("phi_multiplicity: d must be >= 1");
    return order_formula(spec).phi_multiplicity(d);
}

struct SylowProfile {
    long long ell = 0;
    int d = 0;         // d_ell(q), or d_ell(-q) for the unitary families
    int v = 0;         // l_valuation(|G|, ell)
    int rank_est = 0;  // Phi_d multiplicity in the order polynomial
    bool cyclic = true;
};

// Sylow ell-data. rank_est is the multiplicity of the cyclotomic factor
// carrying ell, which agrees with the ell-rank in every regime the pipeline
// consults; the caller flags ell | n queries separately.
inline SylowProfile sylow_profile(const GroupSpec& spec, long long ell) {
    validate_spec(spec);
    if (ell < 3 || !is_prime(Bigint(ell))) throw std::invalid_argument("sylow_profile: ell must be an odd prime");
    if (spec.q % ell == 0) throw std::invalid_argument("sylow_profile: ell must not divide q");
    SylowProfile profile;
    profile.ell = ell;
    int d_untwisted = mult_order(Bigint(spec.q), Bigint(ell));
    profile.d = is_twisted_unitary_like(spec.family) ? mult_order(Bigint(-spec.q), Bigint(ell)) : d_untwisted;
    GroupOrder order = order_formula(spec);
    profile.rank_est = order.phi_multiplicity(d_untwisted);
    for (const auto& [e, m] : order.phi) {
        Bigint value = cyclotomic(e).eval(Bigint(spec.q));
        if (value % ell == 0) profile.v += m * l_valuation(value, Bigint(ell));
    }
    profile.cyclic = profile.rank_est <= 1;
    return profile;
}

// Maximal torus of SL_n(q) or SU_n(q) attached to a cycle type.
struct TorusClass {
    Partition shape;
    Family family = Family::SL;
    GroupOrder order;  // |T^F|, with the (q -+ 1) quotient already applied
    Bigint automizer_order;
};

// SL: (q-1)|T| = prod_i (q^{la_i}-1); SU: (q+1)|T| = prod_i (q^{la_i}-(-1)^{la_i}).
inline TorusClass torus_class(Family family, const Partition& shape) {
    if (family != Family::SL && family != Family::SU)
        throw std::invalid_argument("torus_class: only SL and SU catalogued");
    TorusClass t;
    t.shape = shape;
    t.family = family;
    for (int p : shape.parts()) {
        if (family == Family::SL)
            detail::add_untwisted_factor(t.order, p);
        else
            detail::add_twisted_factor(t.order, p);
    }
    int quotient_phi = family == Family::SL ? 1 : 2;
    auto it = t.order.phi.find(quotient_phi);
    if (it == t.order.phi.end() || it->second < 1) throw internal_error("torus_class: missing quotient factor");
    if (--it->second == 0) t.order.phi.erase(it);
    t.automizer_order = centralizer_order(shape);
    return t;
}

inline std::vector<TorusClass> torus_catalog(const GroupSpec& spec) {
    validate_spec(spec);
    if (spec.family != Family::SL && spec.family != Family::SU)
        throw std::invalid_argument("torus_catalog: only SL and SU catalogued");
    std::vector<TorusClass> out;
    for (const auto& shape : partitions_of(spec.n)) out.push_back(torus_class(spec.family, shape));
    return out;
}

}  // namespace endoscope
