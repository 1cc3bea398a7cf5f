#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "endoscope/partition.hpp"

namespace endoscope {

// All ways of removing a rim hook of size h from lambda, each with the sign
// (-1)^{leg length}. Computed on beta-numbers: removing an h-hook moves a
// bead down by h, and the leg length is the number of beads jumped over.
// Empty result iff lambda has no h-hook.
inline std::vector<std::pair<Partition, int>> remove_rim_hook(const Partition& lambda, int h) {
    if (h < 1) throw std::invalid_argument("remove_rim_hook: h must be >= 1");
    std::vector<std::pair<Partition, int>> out;
    const int k = lambda.length();
    if (k == 0) return out;
    std::vector<int> beta(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) beta[static_cast<size_t>(i)] = lambda.part(i) + (k - 1 - i);
    auto in_beta = [&](int v) {
        for (int b : beta)
            if (b == v) return true;
        return false;
    };
    for (int i = 0; i < k; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int target = b - h;
        if (target < 0 || in_beta(target)) continue;
        int leg = 0;
        for (int x : beta)
            if (x > target && x < b) ++leg;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) parts[static_cast<size_t>(j)] = nb[static_cast<size_t>(j)] - (k - 1 - j);
        out.emplace_back(Partition(std::move(parts)), leg % 2 == 0 ? 1 : -1);
    }
    return out;
}

namespace detail {

inline std::string mn_key(const Partition& la, const CycleType& mu) {
    std::string key;
    key.reserve(static_cast<size_t>(la.length() + mu.length()) + 2);
    for (int p : la.parts()) key += static_cast<char>(p);
    key += '\xff';
    for (int p : mu.parts()) key += static_cast<char>(p);
    return key;
}

}  // namespace detail

// Murnaghan-Nakayama value phi_lambda(w) for w of cycle type mu. The
// recursion strips the largest cycle first so memo keys are canonical.
inline long long mn_value(const Partition& lambda, const CycleType& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("mn_value: |lambda| != |mu|");
    static thread_local std::unordered_map<std::string, long long> memo;
    auto rec = [&](auto&& self, const Partition& la, const CycleType& m) -> long long {
        if (m.is_empty()) return 1;  // phi_empty(empty) = 1
        std::string key = detail::mn_key(la, m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int largest = m.part(0);
        std::vector<int> rest(m.parts().begin() + 1, m.parts().end());
        CycleType tail(std::move(rest));
        long long total = 0;
        for (const auto& [smaller, sign] : remove_rim_hook(la, largest))
            total += sign * self(self, smaller, tail);
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(rec, lambda, mu);
}

// Full S_n character table via mn_value; rows and columns both indexed by
// partitions_of(n) order.
inline std::vector<std::vector<long long>> character_table_sn(int n, int bound = 10) {
    if (n < 1 || n > bound) throw std::out_of_range("character_table_sn: n outside configured bound");
    auto parts = partitions_of(n);
    std::vector<std::vector<long long>> table(parts.size(), std::vector<long long>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < parts.size(); ++j) table[i][j] = mn_value(parts[i], parts[j]);
    return table;
}

}  // namespace endoscope
