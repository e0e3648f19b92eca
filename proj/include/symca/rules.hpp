#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "symca/rational.hpp"

namespace symca::rules {

// Five-cell von Neumann neighborhood states. The local rule of a symmetric
// automaton may not distinguish neighborhoods whose rings (up,right,down,left)
// lie in the same orbit of the dihedral group of the square, which collapses
// the 32 raw neighborhoods into 12 classes.
struct Neighborhood {
    std::uint8_t up, left, center, right, down;

    // Packed index: U<<4 | L<<3 | C<<2 | R<<1 | D.
    unsigned index() const {
        return unsigned(up) << 4 | unsigned(left) << 3 | unsigned(center) << 2 |
               unsigned(right) << 1 | unsigned(down);
    }
    static Neighborhood from_index(unsigned idx) {
        return {std::uint8_t(idx >> 4 & 1), std::uint8_t(idx >> 3 & 1), std::uint8_t(idx >> 2 & 1),
                std::uint8_t(idx >> 1 & 1), std::uint8_t(idx & 1)};
    }
    friend bool operator==(const Neighborhood&, const Neighborhood&) = default;
};

inline constexpr unsigned kNeighborhoodCount = 32;

// Orbit of the four ring cells under the 8-element dihedral group.
enum class RingShape : std::uint8_t { Full, Triple, OppositePair, AdjacentPair, Single, Empty };

struct NeighborhoodClass {
    std::uint8_t center;
    RingShape ring;
    friend bool operator==(const NeighborhoodClass&, const NeighborhoodClass&) = default;
};

inline constexpr int kClassCount = 12;

NeighborhoodClass classify(const Neighborhood& n);

// Canonical class enumeration (fixed column order used for serialization and
// for the lexicographic pinning of searched rules): center 1 then center 0,
// each ordered full, triple, opposite, adjacent, single, empty.
int class_index(const NeighborhoodClass& c);
NeighborhoodClass class_at(int idx);
std::string_view class_name(int idx);  // "c1-full", ..., "c0-empty"
int class_index_by_name(std::string_view name);

enum class Trit : std::uint8_t { Zero = 0, One = 1, Wild = 2 };

// A 12-entry symmetric rule table; entries may be wildcards. Immutable value
// once built; safe to share across workers.
struct SymRuleTable {
    std::array<Trit, kClassCount> outputs{};
    std::string name;

    bool concrete() const {
        for (Trit t : outputs)
            if (t == Trit::Wild) return false;
        return true;
    }
    // Output vector as a string over {0,1,*} in canonical column order.
    std::string output_string() const;
    friend bool operator==(const SymRuleTable& a, const SymRuleTable& b) {
        return a.outputs == b.outputs;
    }
};

// Concrete 32-entry local rule over raw neighborhoods.
class FullRuleTable {
public:
    FullRuleTable() : out_{} {}
    explicit FullRuleTable(const std::array<std::uint8_t, kNeighborhoodCount>& out) : out_(out) {}

    std::uint8_t apply_index(unsigned idx) const { return out_[idx]; }
    std::uint8_t operator()(unsigned u, unsigned l, unsigned c, unsigned r, unsigned d) const {
        return out_[u << 4 | l << 3 | c << 2 | r << 1 | d];
    }
    // A quiescent rule keeps the all-zero background dead; evolution from a
    // finite support requires it.
    bool quiescent() const { return out_[0] == 0; }
    const std::array<std::uint8_t, kNeighborhoodCount>& raw() const { return out_; }
    friend bool operator==(const FullRuleTable&, const FullRuleTable&) = default;

private:
    std::array<std::uint8_t, kNeighborhoodCount> out_;
};

// Expands a 12-class table to the 32 raw neighborhoods, substituting
// wildcard_value for every wildcard entry. The result is symmetry-valid by
// construction.
FullRuleTable expand(const SymRuleTable& rule, int wildcard_value);

// True iff the table is constant on each of the 12 orbits (all eight group
// element equalities hold for every neighborhood).
bool validate_symmetry(const FullRuleTable& full);

// The three published rule rows, wildcards preserved, in canonical column
// order:  ta  = * * * * * 0 1 * 1 0 1 0
//         tb  = 1 * 1 0 1 1 1 * * 0 1 0
//         ts0 = * * * * * 0 1 * 1 0 1 0   (printed identical to ta)
// Throws std::invalid_argument for unknown names.
SymRuleTable builtin(std::string_view name);

// Concrete tables pinned by exhaustive census search (see
// resolve_rule_ambiguity); these are the rules the rest of the library
// evolves. Names: ta, tb, ts0.
SymRuleTable pinned(std::string_view name);

// Oracle: expected live-cell count at step t-1, i.e. num(t), for t >= 1.
using CensusOracle = std::function<BigInt(int)>;

// Enumerates all 4096 concrete 12-entry tables and returns those whose orbit
// from the single site seed satisfies population(step t-1) == oracle(t) for
// all 1 <= t <= horizon. Deterministic: sorted by output vector. An empty
// result is a valid outcome.
std::vector<SymRuleTable> search_rules(const CensusOracle& oracle, int horizon);

// Re-runs the searches that pin ta, tb and ts0 (horizon 32, lexicographically
// smallest match) and returns the three tables in that order. pinned() serves
// the stored copies; a test asserts both agree.
std::vector<SymRuleTable> resolve_rule_ambiguity();

// JSON rule format:
//   {"name": str, "outputs": [12 entries of 0|1|"*"], "column_order": [12 class names]}
std::string to_json(const SymRuleTable& rule);
SymRuleTable rule_from_json(const std::string& text);

}  // namespace symca::rules
