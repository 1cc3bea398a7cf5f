#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "endoscope/groups.hpp"
#include "endoscope/partition.hpp"

namespace endoscope {

// Inputs for the regular-element predicates. d is the order of q (SL) or
// -q (SU) modulo ell. The predicates decide the sufficient conditions of
// the torus lemmas: "false" means not guaranteed, not nonexistent.
struct RegularityQuery {
    Partition shape;
    Family family = Family::SL;
    long long q = 2;
    long long ell = 3;
    int d = 1;
};

// T^F contains regular elements when all parts are distinct, or q >= 3 and
// no part repeats more than twice.
inline bool has_regular(const RegularityQuery& query) {
    if (query.shape.parts_distinct()) return true;
    return query.q >= 3 && query.shape.max_multiplicity() <= 2;
}

// ... and ell-singular regular elements when additionally some part is
// divisible by d and (d > 1 or the shape has >= 2 parts).
inline bool has_l_singular_regular(const RegularityQuery& query) {
    if (!query.shape.has_part_divisible_by(query.d))
        throw std::invalid_argument("has_l_singular_regular: no part divisible by d");
    if (!has_regular(query)) return false;
    return query.d > 1 || query.shape.length() >= 2;
}

// ... with non-central ell-part when d > 1, or >= 3 parts, or ell divides
// (q -+ 1)/gcd(n, q -+ 1) and >= 2 parts.
inline bool has_noncentral_l_regular(const RegularityQuery& query, bool center_divisibility) {
    if (!query.shape.has_part_divisible_by(query.d))
        throw std::invalid_argument("has_noncentral_l_regular: no part divisible by d");
    if (!has_regular(query)) return false;
    if (query.d > 1) return true;
    if (query.shape.length() >= 3) return true;
    return center_divisibility && query.shape.length() >= 2;
}

namespace detail {

// Can `parts` be split into a sub-multiset summing to target?
inline bool multiset_subset_sum(const std::vector<int>& parts, int target) {
    std::vector<char> reachable(static_cast<size_t>(target) + 1, 0);
    reachable[0] = 1;
    for (int p : parts)
        for (int s = target; s >= p; --s)
            if (reachable[static_cast<size_t>(s - p)]) reachable[static_cast<size_t>(s)] = 1;
    return reachable[static_cast<size_t>(target)] != 0;
}

}  // namespace detail

// Every shape splits into two sub-multisets with sums n1 and n2, i.e. the
// maximal Young subgroup S_{n1} x S_{n2} contains elements of all shapes.
inline bool young_realizable(const std::vector<CycleType>& shapes, int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("young_realizable: block sizes must be >= 1");
    for (const auto& shape : shapes) {
        if (shape.size() != n1 + n2) throw std::invalid_argument("young_realizable: shape size mismatch");
        if (!detail::multiset_subset_sum(shape.parts(), n1)) return false;
    }
    return true;
}

namespace detail {

// Can the remaining multiset of parts absorb `count` block-cycles of length
// c, each combining with a base product of cycle type summing to a?
// A c-block-cycle with base product of type mu contributes cycles c*mu.
inline bool wreath_cover(std::vector<int>& parts, const std::vector<int>& tau, size_t idx, int a) {
    if (idx == tau.size()) {
        for (int p : parts)
            if (p != 0) return false;
        return true;
    }
    int c = tau[idx];
    // choose a sub-multiset of parts, all divisible by c, quotients summing to a
    std::vector<size_t> candidates;
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i] != 0 && parts[i] % c == 0) candidates.push_back(i);
    auto choose = [&](auto&& self, size_t from, int remaining) -> bool {
        if (remaining == 0) return wreath_cover(parts, tau, idx + 1, a);
        for (size_t ci = from; ci < candidates.size(); ++ci) {
            size_t i = candidates[ci];
            if (parts[i] == 0) continue;
            int quotient = parts[i] / c;
            if (quotient > remaining) continue;
            int saved = parts[i];
            parts[i] = 0;
            if (self(self, ci + 1, remaining - quotient)) {
                parts[i] = saved;
                return true;
            }
            parts[i] = saved;
        }
        return false;
    };
    return choose(choose, 0, a);
}

}  // namespace detail

// Whether the imprimitive wreath product S_a wr S_b (b blocks of size a,
// acting on n = a*b points) contains an element of the given cycle type.
// Decided on cycle types: pick a type tau of S_b for the block action and
// cover the shape by c*mu contributions, one per c-cycle of tau.
inline bool wreath_realizable(const CycleType& shape, int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("wreath_realizable: need a, b >= 2");
    if (shape.size() != a * b) throw std::invalid_argument("wreath_realizable: shape size mismatch");
    for (const auto& tau : partitions_of(b)) {
        std::vector<int> parts = shape.parts();
        if (detail::wreath_cover(parts, tau.parts(), 0, a)) return true;
    }
    return false;
}

struct CoverWitness {
    enum class Kind { Young, Wreath } kind;
    int a = 0;
    int b = 0;

    std::string to_string() const {
        std::ostringstream os;
        if (kind == Kind::Young)
            os << "S_" << a << " x S_" << b;
        else
            os << "S_" << a << " wr S_" << b;
        return os.str();
    }
};

// Searches maximal intransitive (two-block Young) and single-level wreath
// subgroups for one containing elements of every given shape. Any
// intransitive subgroup lies in some S_{n1} x S_{n2} and any imprimitive
// one in some S_a wr S_b, so maximality suffices. "none" certifies that no
// intransitive or imprimitive subgroup covers all shapes.
inline std::optional<CoverWitness> proper_subgroup_covers(int n, const std::vector<CycleType>& shapes,
                                                          int bound = 14) {
    if (n > bound) throw std::out_of_range("proper_subgroup_covers: n exceeds configured bound");
    if (shapes.empty()) throw std::invalid_argument("proper_subgroup_covers: empty shape list");
    for (const auto& s : shapes)
        if (s.size() != n) throw std::invalid_argument("proper_subgroup_covers: shape size mismatch");
    for (int n1 = n - 1; n1 >= (n + 1) / 2; --n1) {
        int n2 = n - n1;
        if (young_realizable(shapes, n1, n2)) return CoverWitness{CoverWitness::Kind::Young, n1, n2};
    }
    for (int a = 2; a <= n / 2; ++a) {
        if (n % a != 0) continue;
        int b = n / a;
        if (b < 2) continue;
        bool all = true;
        for (const auto& s : shapes)
            if (!wreath_realizable(s, a, b)) {
                all = false;
                break;
            }
        if (all) return CoverWitness{CoverWitness::Kind::Wreath, a, b};
    }
    return std::nullopt;
}

// F-stable Levi realizability. An F-stable Levi subgroup of GL_n splits as
// a product of factors GL_{a_i}(q^{b_i}) with sum a_i b_i = n; the torus
// types it contains are exactly the concatenations of b_i * mu_i with
// mu_i a partition of a_i. This is the torus-type test the series-level
// elimination actually needs: the naive subgroup test above over-counts,
// because no single F-form realizes both the twisted and untwisted types
// of an imprimitive Weyl subgroup at once.
struct LeviWitness {
    std::vector<std::pair<int, int>> factors;  // (a_i, b_i)

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << " x ";
            os << "GL_" << factors[i].first << "(q";
            if (factors[i].second > 1) os << "^" << factors[i].second;
            os << ")";
        }
        return os.str();
    }
};

namespace detail {

inline bool levi_realizes(const std::vector<std::pair<int, int>>& factors, const CycleType& shape) {
    // assign each part to a factor; factor (a, b) takes parts divisible by b
    // with quotients summing to exactly a
    std::vector<int> remaining(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) remaining[i] = factors[i].first;
    const auto& parts = shape.parts();
    auto assign = [&](auto&& self, size_t pi) -> bool {
        if (pi == parts.size()) {
            for (int r : remaining)
                if (r != 0) return false;
            return true;
        }
        int p = parts[pi];
        std::set<std::pair<int, int>> tried;  // dedupe identical factor states
        for (size_t f = 0; f < factors.size(); ++f) {
            int b = factors[f].second;
            if (p % b != 0) continue;
            int quotient = p / b;
            if (quotient > remaining[f]) continue;
            if (!tried.insert({b, remaining[f]}).second) continue;
            remaining[f] -= quotient;
            if (self(self, pi + 1)) {
                remaining[f] += quotient;
                return true;
            }
            remaining[f] += quotient;
        }
        return false;
    };
    return assign(assign, 0);
}

// Multisets of factors (a, b) with sum a*b = n, generated as nonincreasing
// sequences in a fixed canonical order so each multiset appears once.
inline void enumerate_levi_factorizations(int n, std::vector<std::vector<std::pair<int, int>>>& out) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; a * b <= n; ++b) pairs.emplace_back(a, b);
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        int wx = x.first * x.second, wy = y.first * y.second;
        if (wx != wy) return wx > wy;
        return x > y;
    });
    std::vector<std::pair<int, int>> current;
    auto rec = [&](auto&& self, size_t from, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (size_t i = from; i < pairs.size(); ++i) {
            if (pairs[i].first * pairs[i].second > remaining) continue;
            current.push_back(pairs[i]);
            self(self, i, remaining - pairs[i].first * pairs[i].second);
            current.pop_back();
        }
    };
    rec(rec, 0, n);
}

}  // namespace detail

inline std::optional<LeviWitness> fstable_levi_covers(int n, const std::vector<CycleType>& shapes,
                                                      int bound = 14) {
    if (n > bound) throw std::out_of_range("fstable_levi_covers: n exceeds configured bound");
    if (shapes.empty()) throw std::invalid_argument("fstable_levi_covers: empty shape list");
    for (const auto& s : shapes)
        if (s.size() != n) throw std::invalid_argument("fstable_levi_covers: shape size mismatch");
    std::vector<std::vector<std::pair<int, int>>> factorizations;
    detail::enumerate_levi_factorizations(n, factorizations);
    for (auto& factors : factorizations) {
        if (factors.size() == 1 && factors[0] == std::make_pair(n, 1)) continue;  // G itself
        bool all = true;
        for (const auto& s : shapes)
            if (!detail::levi_realizes(factors, s)) {
                all = false;
                break;
            }
        if (all) return LeviWitness{factors};
    }
    return std::nullopt;
}

}  // namespace endoscope
