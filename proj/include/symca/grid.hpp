#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_set>
#include <vector>

#include "symca/rules.hpp"

namespace symca::grid {

struct Coord {
    int i, j;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

// Finite-support configuration: the set of live cells plus the generation
// counter. Evolved from the single site seed every live cell stays inside the
// light cone |i| + |j| <= generation.
class Configuration {
public:
    Configuration() = default;

    static Configuration single_site_seed();

    bool alive(int i, int j) const { return cells_.count(pack(i, j)) != 0; }
    void set(int i, int j) { cells_.insert(pack(i, j)); }
    std::size_t population() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    int generation() const { return generation_; }
    void set_generation(int g) { generation_ = g; }

    // Cells in (i, j) lexicographic order; the deterministic iteration used
    // by serialization and tests.
    std::vector<Coord> sorted_cells() const;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.cells_ == b.cells_;
    }

private:
    static std::uint64_t pack(int i, int j) {
        return (std::uint64_t(std::uint32_t(i)) << 32) | std::uint32_t(j);
    }
    std::unordered_set<std::uint64_t> cells_;
    int generation_ = 0;
};

// One synchronous update. Only cells in the support and its four-neighbor
// shell can change, which is exhaustive for quiescent rules; non-quiescent
// rules are rejected up front (their orbit from a finite seed has infinite
// support).
Configuration step(const rules::FullRuleTable& rule, const Configuration& c);

// t-fold composition of step; evolve(rule, c, 0) is the identity.
Configuration evolve(const rules::FullRuleTable& rule, Configuration c, int steps);

inline std::size_t population(const Configuration& c) { return c.population(); }

struct Window {
    int i0, j0;  // lower-left corner
    int width, height;
};

// Exact rasterization of the live cells inside a window. Row 0 is the top
// row (j = j0 + height - 1); bit order within a row follows increasing i.
struct PatternBitmap {
    int i0, j0;
    int width, height;
    std::vector<std::uint8_t> bits;  // row-major, 1 = live

    std::uint8_t at(int row, int col) const { return bits[std::size_t(row) * width + col]; }
    std::size_t live_count() const;
};

PatternBitmap snapshot(const Configuration& c, const Window& w);

// Binary PGM (P5): live = 255, background = 0.
void write_pgm(std::ostream& os, const PatternBitmap& bmp);
// Plain PBM (P1): live = 1.
void write_pbm(std::ostream& os, const PatternBitmap& bmp);

// Dense bit-packed orbit from the single site seed, evaluated over the light
// cone only. Fast path for census sweeps and rule search; must agree
// bit-exactly with step() (differential-tested).
class DenseOrbit {
public:
    DenseOrbit(const rules::FullRuleTable& rule, int max_steps);

    void advance();
    int time() const { return time_; }
    int max_steps() const { return radius_; }
    std::uint64_t population() const { return population_; }
    bool alive(int i, int j) const;
    Configuration to_configuration() const;

private:
    std::uint64_t* word(std::vector<std::uint64_t>& buf, int i, int j);
    bool get(const std::vector<std::uint64_t>& buf, int i, int j) const;

    rules::FullRuleTable rule_;
    int radius_;
    int words_per_row_;
    int time_ = 0;
    std::uint64_t population_ = 1;
    std::vector<std::uint64_t> cur_, nxt_;
};

}  // namespace symca::grid
