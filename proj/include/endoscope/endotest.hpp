#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "endoscope/bigint.hpp"
#include "endoscope/numtheory.hpp"

namespace endoscope {

// Ingested class/character data, restricted to what the value-level
// endotriviality criteria consult. Values may be absent (null) only on
// classes whose element order is coprime to the prime being queried.
struct ClassData {
    std::string name;
    long long element_order = 1;
    Bigint size;
};

struct CharacterData {
    std::string name;
    Bigint degree;
    std::vector<std::optional<Bigint>> values;  // aligned with classes
    bool trivial_source_note = false;
};

struct CharacterTableData {
    std::string group_name;
    Bigint group_order;
    std::vector<ClassData> classes;
    std::vector<CharacterData> characters;

    const CharacterData& character(const std::string& name) const {
        for (const auto& c : characters)
            if (c.name == name) return c;
        throw std::invalid_argument("character not found: " + name);
    }

    void validate() const {
        Bigint total = 0;
        for (const auto& c : classes) {
            if (c.size <= 0) throw std::invalid_argument("class size must be positive: " + c.name);
            if (c.element_order < 1) throw std::invalid_argument("element order must be >= 1: " + c.name);
            total += c.size;
        }
        if (total != group_order) throw std::invalid_argument("class sizes do not sum to the group order");
        bool has_identity = false;
        for (size_t i = 0; i < classes.size(); ++i) {
            if (classes[i].element_order != 1) continue;
            has_identity = true;
            for (const auto& ch : characters) {
                if (ch.values.size() != classes.size())
                    throw std::invalid_argument("value row length mismatch for " + ch.name);
                if (!ch.values[i].has_value() || *ch.values[i] != ch.degree)
                    throw std::invalid_argument("degree does not match identity value for " + ch.name);
            }
        }
        if (!has_identity) throw std::invalid_argument("table has no identity class");
    }
};

enum class TorcharVerdict { Endotrivial, NotEndotrivial, NotApplicable };

struct TorcharResult {
    TorcharVerdict verdict = TorcharVerdict::NotApplicable;
    std::string witness_class;
    Bigint residue;  // degree mod |G|_ell
    std::string reason;
};

namespace detail {

inline bool is_ell_power(long long order, long long ell) {
    if (order < 1) return false;
    while (order % ell == 0) order /= ell;
    return order == 1;
}

}  // namespace detail

// Trivial source criterion: the module is endotrivial iff the character
// takes value 1 on every nontrivial ell-element. The trivial-source
// hypothesis is the caller's assertion and is not verified here.
inline TorcharResult torchar_check(const CharacterTableData& table, const std::string& char_name, long long ell) {
    if (!is_prime(Bigint(ell))) throw std::invalid_argument("torchar_check: ell must be prime");
    if (table.group_order % ell != 0) throw std::invalid_argument("torchar_check: ell does not divide |G|");
    const CharacterData& chi = table.character(char_name);
    TorcharResult result;
    int v = l_valuation(table.group_order, Bigint(ell));
    result.residue = chi.degree % big_pow(Bigint(ell), static_cast<unsigned>(v));
    for (size_t i = 0; i < table.classes.size(); ++i) {
        const auto& cls = table.classes[i];
        if (cls.element_order == 1 || !detail::is_ell_power(cls.element_order, ell)) continue;
        if (!chi.values[i].has_value())
            throw std::invalid_argument("missing value on ell-class " + cls.name + " for " + char_name);
        if (*chi.values[i] != 1) {
            result.verdict = TorcharVerdict::NotEndotrivial;
            result.witness_class = cls.name;
            result.reason = "value " + chi.values[i]->str() + " != 1 on class " + cls.name;
            return result;
        }
    }
    result.verdict = TorcharVerdict::Endotrivial;
    result.reason = "value 1 on every nontrivial ell-element";
    return result;
}

struct ValueViolation {
    std::string class_name;
    Bigint value;
};

// Landrock-Scott: a trivial source character is a nonnegative integer on
// every ell-element. Flags violations; missing values are errors.
inline std::vector<ValueViolation> landrock_scott_check(const CharacterTableData& table,
                                                        const std::string& char_name, long long ell) {
    if (!is_prime(Bigint(ell))) throw std::invalid_argument("landrock_scott_check: ell must be prime");
    const CharacterData& chi = table.character(char_name);
    std::vector<ValueViolation> out;
    for (size_t i = 0; i < table.classes.size(); ++i) {
        const auto& cls = table.classes[i];
        if (!detail::is_ell_power(cls.element_order, ell)) continue;
        if (!chi.values[i].has_value())
            throw std::invalid_argument("missing value on ell-class " + cls.name + " for " + char_name);
        if (*chi.values[i] < 0) out.push_back({cls.name, *chi.values[i]});
    }
    return out;
}

// Self-dual congruence: degree = 1 (mod |G|_ell).
inline bool selfdual_congruence(const Bigint& degree, const Bigint& group_order, long long ell) {
    if (ell < 3) throw std::invalid_argument("selfdual_congruence: ell must be an odd prime");
    int v = l_valuation(group_order, Bigint(ell));
    Bigint modulus = big_pow(Bigint(ell), static_cast<unsigned>(v));
    return degree % modulus == 1;
}

// degree = +-1 (mod |G|_ell).
inline bool degree_pm1_check(const Bigint& degree, const Bigint& group_order, long long ell) {
    if (ell < 3) throw std::invalid_argument("degree_pm1_check: ell must be an odd prime");
    int v = l_valuation(group_order, Bigint(ell));
    Bigint modulus = big_pow(Bigint(ell), static_cast<unsigned>(v));
    Bigint r = degree % modulus;
    if (r < 0) r += modulus;
    return r == 1 || r == modulus - 1;
}

struct Loewy4Result {
    bool passes = false;
    std::string witness_class;  // first failing l-singular class, if any
    std::string reason;
};

// Necessary condition for Loewy length 4 of the principal block: some
// character takes value -1 on every ell-singular class and has degree
// -1 mod |G|_ell. A pass is necessary, not sufficient.
inline Loewy4Result loewy4_check(const CharacterTableData& table, const std::string& char_name, long long ell) {
    if (!is_prime(Bigint(ell))) throw std::invalid_argument("loewy4_check: ell must be prime");
    const CharacterData& chi = table.character(char_name);
    Loewy4Result result;
    for (size_t i = 0; i < table.classes.size(); ++i) {
        const auto& cls = table.classes[i];
        if (cls.element_order % ell != 0) continue;
        if (!chi.values[i].has_value())
            throw std::invalid_argument("missing value on ell-singular class " + cls.name + " for " + char_name);
        if (*chi.values[i] != -1) {
            result.witness_class = cls.name;
            result.reason = "value " + chi.values[i]->str() + " != -1 on class " + cls.name;
            return result;
        }
    }
    int v = l_valuation(table.group_order, Bigint(ell));
    Bigint modulus = big_pow(Bigint(ell), static_cast<unsigned>(v));
    if ((chi.degree + 1) % modulus != 0) {
        result.reason = "degree " + chi.degree.str() + " != -1 (mod " + modulus.str() + ")";
        return result;
    }
    result.passes = true;
    result.reason = "value -1 on all ell-singular classes and degree = -1 (mod |G|_ell)";
    return result;
}

namespace detail {

inline Bigint parse_decimal(const nlohmann::json& j, const std::string& where) {
    try {
        if (j.is_string()) return Bigint(j.get<std::string>());
        if (j.is_number_integer()) return Bigint(j.get<long long>());
    } catch (...) {
    }
    throw std::invalid_argument("expected a decimal string at " + where);
}

}  // namespace detail

// Parses the character-table JSON schema:
//   {"group": str, "order": decimal-string,
//    "classes": [{"name", "element_order", "size"}],
//    "characters": [{"name", "degree", "values": [int|null], "trivial_source"?}]}
inline CharacterTableData ingest_table(std::istream& in, const std::string& origin = "<stream>") {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(origin + ": JSON parse error: " + e.what());
    }
    CharacterTableData table;
    try {
        table.group_name = j.at("group").get<std::string>();
        table.group_order = detail::parse_decimal(j.at("order"), origin + ".order");
        for (const auto& cj : j.at("classes")) {
            ClassData c;
            c.name = cj.at("name").get<std::string>();
            c.element_order = cj.at("element_order").get<long long>();
            c.size = detail::parse_decimal(cj.at("size"), origin + ".classes.size");
            table.classes.push_back(std::move(c));
        }
        for (const auto& hj : j.at("characters")) {
            CharacterData c;
            c.name = hj.at("name").get<std::string>();
            c.degree = detail::parse_decimal(hj.at("degree"), origin + ".characters.degree");
            for (const auto& vj : hj.at("values")) {
                if (vj.is_null())
                    c.values.push_back(std::nullopt);
                else if (vj.is_number_integer())
                    c.values.emplace_back(Bigint(vj.get<long long>()));
                else if (vj.is_string())
                    c.values.emplace_back(Bigint(vj.get<std::string>()));
                else
                    throw std::invalid_argument("character values must be integers or null");
            }
            if (hj.contains("trivial_source")) c.trivial_source_note = hj.at("trivial_source").get<bool>();
            table.characters.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(origin + ": malformed table: " + e.what());
    }
    table.validate();
    return table;
}

inline CharacterTableData ingest_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    return ingest_table(in, path);
}

}  // namespace endoscope
