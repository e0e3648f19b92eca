#include "symca/rules.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "symca/census.hpp"
#include "symca/grid.hpp"

namespace symca::rules {

namespace {

// Ring in cyclic order (up, right, down, left); the dihedral group acts by
// rotating and reversing this 4-tuple.
struct Ring {
    std::array<std::uint8_t, 4> v;
};

Ring ring_of(const Neighborhood& n) { return {{n.up, n.right, n.down, n.left}}; }

Neighborhood with_ring(std::uint8_t center, const Ring& r) {
    return {r.v[0], r.v[3], center, r.v[1], r.v[2]};
}

constexpr std::array<std::string_view, kClassCount> kClassNames = {
    "c1-full", "c1-triple", "c1-opposite", "c1-adjacent", "c1-single", "c1-empty",
    "c0-full", "c0-triple", "c0-opposite", "c0-adjacent", "c0-single", "c0-empty",
};

char trit_char(Trit t) { return t == Trit::Wild ? '*' : (t == Trit::One ? '1' : '0'); }

}  // namespace

NeighborhoodClass classify(const Neighborhood& n) {
    const unsigned count = n.up + n.right + n.down + n.left;
    RingShape shape;
    switch (count) {
        case 0: shape = RingShape::Empty; break;
        case 1: shape = RingShape::Single; break;
        case 2: shape = (n.up == n.down) ? RingShape::OppositePair : RingShape::AdjacentPair; break;
        case 3: shape = RingShape::Triple; break;
        default: shape = RingShape::Full; break;
    }
    return {n.center, shape};
}

int class_index(const NeighborhoodClass& c) {
    return (c.center ? 0 : 6) + int(c.ring);
}

NeighborhoodClass class_at(int idx) {
    if (idx < 0 || idx >= kClassCount) throw std::out_of_range("class_at");
    return {std::uint8_t(idx < 6 ? 1 : 0), RingShape(idx % 6)};
}

std::string_view class_name(int idx) {
    if (idx < 0 || idx >= kClassCount) throw std::out_of_range("class_name");
    return kClassNames[std::size_t(idx)];
}

int class_index_by_name(std::string_view name) {
    for (int i = 0; i < kClassCount; ++i)
        if (kClassNames[std::size_t(i)] == name) return i;
    throw std::invalid_argument("unknown neighborhood class name: " + std::string(name));
}

std::string SymRuleTable::output_string() const {
    std::string s;
    for (Trit t : outputs) s += trit_char(t);
    return s;
}

FullRuleTable expand(const SymRuleTable& rule, int wildcard_value) {
    if (wildcard_value != 0 && wildcard_value != 1)
        throw std::invalid_argument("expand: wildcard_value must be 0 or 1");
    std::array<std::uint8_t, kNeighborhoodCount> out{};
    for (unsigned idx = 0; idx < kNeighborhoodCount; ++idx) {
        const Trit t = rule.outputs[std::size_t(class_index(classify(Neighborhood::from_index(idx))))];
        out[idx] = t == Trit::Wild ? std::uint8_t(wildcard_value) : std::uint8_t(t);
    }
    return FullRuleTable(out);
}

bool validate_symmetry(const FullRuleTable& full) {
    for (unsigned idx = 0; idx < kNeighborhoodCount; ++idx) {
        const Neighborhood n = Neighborhood::from_index(idx);
        const Ring r = ring_of(n);
        const std::uint8_t ref = full.apply_index(idx);
        for (int refl = 0; refl < 2; ++refl) {
            Ring base = r;
            if (refl) std::reverse(base.v.begin(), base.v.end());
            for (int rot = 0; rot < 4; ++rot) {
                Ring t;
                for (int p = 0; p < 4; ++p) t.v[std::size_t(p)] = base.v[std::size_t((p + rot) % 4)];
                if (full.apply_index(with_ring(n.center, t).index()) != ref) return false;
            }
        }
    }
    return true;
}

namespace {

SymRuleTable from_tokens(std::string_view name, std::string_view tokens) {
    SymRuleTable r;
    r.name = std::string(name);
    for (int i = 0; i < kClassCount; ++i) {
        switch (tokens[std::size_t(i)]) {
            case '0': r.outputs[std::size_t(i)] = Trit::Zero; break;
            case '1': r.outputs[std::size_t(i)] = Trit::One; break;
            case '*': r.outputs[std::size_t(i)] = Trit::Wild; break;
            default: throw std::invalid_argument("bad rule token");
        }
    }
    return r;
}

}  // namespace

SymRuleTable builtin(std::string_view name) {
    // Published rows in canonical column order. ta and ts0 are printed
    // identically; the concrete tables that actually reproduce their census
    // sequences differ and live in pinned().
    if (name == "ta") return from_tokens("ta", "*****01*1010");
    if (name == "tb") return from_tokens("tb", "1*10111**010");
    if (name == "ts0") return from_tokens("ts0", "*****01*1010");
    throw std::invalid_argument("unknown builtin rule: " + std::string(name));
}

SymRuleTable pinned(std::string_view name) {
    // Concrete tables resolved by search_rules over all 4096 candidates
    // (horizon 32, lexicographically smallest matching output vector); a
    // test asserts these stay equal to resolve_rule_ambiguity().
    // ta matches its published row (wildcards 0); tb likewise. The published
    // ts0 row does not reproduce its own census (it repeats the ta row); the
    // search pins the table where only c0-single maps to 1.
    if (name == "ta") return from_tokens("ta", "000000101010");
    if (name == "tb") return from_tokens("tb", "101011100010");
    if (name == "ts0") return from_tokens("ts0", "000000000010");
    throw std::invalid_argument("unknown pinned rule: " + std::string(name));
}

std::vector<SymRuleTable> search_rules(const CensusOracle& oracle, int horizon) {
    if (horizon < 2) throw std::invalid_argument("search_rules: horizon must be >= 2");
    std::vector<BigInt> expected(std::size_t(horizon) + 1);
    for (int t = 1; t <= horizon; ++t) expected[std::size_t(t)] = oracle(t);

    std::vector<SymRuleTable> matches;
    for (unsigned v = 0; v < (1u << kClassCount); ++v) {
        SymRuleTable cand;
        for (int i = 0; i < kClassCount; ++i)
            cand.outputs[std::size_t(i)] = Trit(v >> (kClassCount - 1 - i) & 1);
        const FullRuleTable full = expand(cand, 0);
        // A non-quiescent rule lights the whole background; its population is
        // infinite from step 1 on and can never match a finite census.
        if (!full.quiescent()) continue;
        grid::DenseOrbit orbit(full, horizon - 1);
        bool ok = true;
        for (int t = 1; t <= horizon && ok; ++t) {
            if (t > 1) orbit.advance();
            ok = expected[std::size_t(t)] == orbit.population();
        }
        if (ok) matches.push_back(std::move(cand));
    }
    std::sort(matches.begin(), matches.end(), [](const SymRuleTable& a, const SymRuleTable& b) {
        return a.outputs < b.outputs;
    });
    return matches;
}

std::vector<SymRuleTable> resolve_rule_ambiguity() {
    struct Target {
        const char* name;
        CensusOracle oracle;
    };
    const Target targets[] = {
        {"ta", [](int t) { return census::num_a(std::uint64_t(t)); }},
        {"tb", [](int t) { return census::num_b(std::uint64_t(t)); }},
        {"ts0", [](int t) { return census::num_s0(std::uint64_t(t)); }},
    };
    std::vector<SymRuleTable> out;
    for (const Target& tg : targets) {
        std::vector<SymRuleTable> found = search_rules(tg.oracle, 32);
        if (found.empty())
            throw std::runtime_error(std::string("resolve_rule_ambiguity: no table matches ") + tg.name);
        found.front().name = tg.name;
        out.push_back(std::move(found.front()));
    }
    return out;
}

std::string to_json(const SymRuleTable& rule) {
    nlohmann::json j;
    j["name"] = rule.name;
    nlohmann::json outputs = nlohmann::json::array();
    for (Trit t : rule.outputs) {
        if (t == Trit::Wild)
            outputs.push_back("*");
        else
            outputs.push_back(int(t));
    }
    j["outputs"] = outputs;
    nlohmann::json order = nlohmann::json::array();
    for (int i = 0; i < kClassCount; ++i) order.push_back(std::string(class_name(i)));
    j["column_order"] = order;
    return j.dump(2);
}

SymRuleTable rule_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SymRuleTable r;
    r.name = j.at("name").get<std::string>();
    const auto& outputs = j.at("outputs");
    const auto& order = j.at("column_order");
    if (outputs.size() != kClassCount || order.size() != kClassCount)
        throw std::invalid_argument("rule_from_json: need exactly 12 outputs and 12 class names");
    std::array<bool, kClassCount> seen{};
    for (std::size_t p = 0; p < kClassCount; ++p) {
        const int idx = class_index_by_name(order[p].get<std::string>());
        if (seen[std::size_t(idx)]) throw std::invalid_argument("rule_from_json: duplicate class name");
        seen[std::size_t(idx)] = true;
        const auto& tok = outputs[p];
        Trit t;
        if (tok.is_string()) {
            if (tok.get<std::string>() != "*")
                throw std::invalid_argument("rule_from_json: bad output token");
            t = Trit::Wild;
        } else {
            const int v = tok.get<int>();
            if (v != 0 && v != 1) throw std::invalid_argument("rule_from_json: outputs must be 0, 1 or \"*\"");
            t = Trit(v);
        }
        r.outputs[std::size_t(idx)] = t;
    }
    return r;
}

}  // namespace symca::rules
