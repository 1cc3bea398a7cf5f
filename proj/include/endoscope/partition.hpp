#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "endoscope/bigint.hpp"

namespace endoscope {

// Integer partition: weakly decreasing positive parts. Also used as the
// cycle type of a symmetric group element, in which case the parts are the
// cycle lengths.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

    // (part, part, ..., part) with `count` copies.
    static Partition rectangle(int part, int count) {
        return Partition(std::vector<int>(static_cast<size_t>(count), part));
    }

    // Hook shape (arm+1, 1^leg).
    static Partition hook(int arm_plus_one, int leg) {
        std::vector<int> p;
        p.push_back(arm_plus_one);
        p.insert(p.end(), static_cast<size_t>(leg), 1);
        return Partition(std::move(p));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool is_empty() const { return parts_.empty(); }

    int size() const {
        int n = 0;
        for (int p : parts_) n += p;
        return n;
    }

    int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    Partition conjugate() const {
        std::vector<int> out;
        if (parts_.empty()) return Partition();
        out.resize(static_cast<size_t>(parts_[0]));
        for (size_t j = 0; j < out.size(); ++j) {
            int col = 0;
            for (int p : parts_)
                if (p > static_cast<int>(j)) ++col;
            out[j] = col;
        }
        return Partition(std::move(out));
    }

    // Hook lengths cell by cell, row-major: arm + leg + 1.
    std::vector<int> hook_lengths() const {
        Partition conj = conjugate();
        std::vector<int> hooks;
        for (int i = 0; i < length(); ++i) {
            for (int j = 0; j < parts_[static_cast<size_t>(i)]; ++j) {
                int arm = parts_[static_cast<size_t>(i)] - j - 1;
                int leg = conj.part(j) - i - 1;
                hooks.push_back(arm + leg + 1);
            }
        }
        return hooks;
    }

    bool has_hook(int h) const {
        auto hooks = hook_lengths();
        return std::find(hooks.begin(), hooks.end(), h) != hooks.end();
    }

    // n(lambda) = sum (i-1)*lambda_i, the q-power in the unipotent degree.
    int n_stat() const {
        int s = 0;
        for (int i = 0; i < length(); ++i) s += i * parts_[static_cast<size_t>(i)];
        return s;
    }

    int max_multiplicity() const {
        int best = 0, run = 0, prev = -1;
        for (int p : parts_) {
            run = (p == prev) ? run + 1 : 1;
            prev = p;
            best = std::max(best, run);
        }
        return best;
    }

    bool parts_distinct() const { return max_multiplicity() <= 1; }

    bool has_part_divisible_by(int d) const {
        for (int p : parts_)
            if (p % d == 0) return true;
        return false;
    }

    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::ostringstream os;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << '+';
            os << parts_[i];
        }
        return os.str();
    }

    // Parses "4+2+1" (also accepts "4,2,1"). Empty string is invalid.
    static std::optional<Partition> parse(const std::string& text) {
        std::vector<int> parts;
        std::string token;
        for (char c : text + "+") {
            if (c == '+' || c == ',') {
                if (token.empty()) return std::nullopt;
                try {
                    parts.push_back(std::stoi(token));
                } catch (...) {
                    return std::nullopt;
                }
                token.clear();
            } else if (c >= '0' && c <= '9') {
                token += c;
            } else {
                return std::nullopt;
            }
        }
        for (int p : parts)
            if (p <= 0) return std::nullopt;
        return Partition(std::move(parts));
    }

private:
    void normalize() {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("partition parts must be positive");
    }

    std::vector<int> parts_;
};

using CycleType = Partition;

// All partitions of n in descending lexicographic order, (n) first and
// (1^n) last. partitions_of(0) = { empty }.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Bigint factorial(int n) {
    Bigint f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// |C_{S_n}(w)| = prod_m m^{k_m} k_m! for w of cycle type mu with k_m parts
// equal to m. The class size is n!/centralizer_order.
inline Bigint centralizer_order(const CycleType& mu) {
    Bigint z = 1;
    const auto& parts = mu.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int mult = static_cast<int>(j - i);
        z *= big_pow(Bigint(parts[i]), static_cast<unsigned>(mult));
        z *= factorial(mult);
        i = j;
    }
    return z;
}

inline int permutation_sign(const CycleType& mu) {
    return (mu.size() - mu.length()) % 2 == 0 ? 1 : -1;
}

}  // namespace endoscope
