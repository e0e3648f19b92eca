#include "symca/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace symca::grid {

Configuration Configuration::single_site_seed() {
    Configuration c;
    c.set(0, 0);
    return c;
}

std::vector<Coord> Configuration::sorted_cells() const {
    std::vector<Coord> out;
    out.reserve(cells_.size());
    for (std::uint64_t p : cells_)
        out.push_back({int(std::int32_t(p >> 32)), int(std::int32_t(p & 0xffffffffu))});
    std::sort(out.begin(), out.end());
    return out;
}

Configuration step(const rules::FullRuleTable& rule, const Configuration& c) {
    if (!rule.quiescent())
        throw std::invalid_argument("step: rule turns the all-zero background on");
    std::vector<Coord> candidates;
    candidates.reserve(c.population() * 5);
    for (const Coord& cell : c.sorted_cells()) {
        candidates.push_back(cell);
        candidates.push_back({cell.i, cell.j + 1});
        candidates.push_back({cell.i - 1, cell.j});
        candidates.push_back({cell.i + 1, cell.j});
        candidates.push_back({cell.i, cell.j - 1});
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    Configuration out;
    out.set_generation(c.generation() + 1);
    for (const Coord& p : candidates) {
        const unsigned u = c.alive(p.i, p.j + 1), l = c.alive(p.i - 1, p.j);
        const unsigned cc = c.alive(p.i, p.j), r = c.alive(p.i + 1, p.j);
        const unsigned d = c.alive(p.i, p.j - 1);
        if (rule(u, l, cc, r, d)) out.set(p.i, p.j);
    }
    return out;
}

Configuration evolve(const rules::FullRuleTable& rule, Configuration c, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve: negative step count");
    for (int s = 0; s < steps; ++s) c = step(rule, c);
    return c;
}

std::size_t PatternBitmap::live_count() const {
    std::size_t n = 0;
    for (std::uint8_t b : bits) n += b;
    return n;
}

PatternBitmap snapshot(const Configuration& c, const Window& w) {
    if (w.width <= 0 || w.height <= 0) throw std::invalid_argument("snapshot: empty window");
    PatternBitmap bmp;
    bmp.i0 = w.i0;
    bmp.j0 = w.j0;
    bmp.width = w.width;
    bmp.height = w.height;
    bmp.bits.assign(std::size_t(w.width) * std::size_t(w.height), 0);
    for (int row = 0; row < w.height; ++row) {
        const int j = w.j0 + w.height - 1 - row;
        for (int col = 0; col < w.width; ++col)
            if (c.alive(w.i0 + col, j)) bmp.bits[std::size_t(row) * w.width + col] = 1;
    }
    return bmp;
}

void write_pgm(std::ostream& os, const PatternBitmap& bmp) {
    os << "P5\n" << bmp.width << " " << bmp.height << "\n255\n";
    std::string row(std::size_t(bmp.width), '\0');
    for (int r = 0; r < bmp.height; ++r) {
        for (int c = 0; c < bmp.width; ++c)
            row[std::size_t(c)] = bmp.at(r, c) ? char(255) : char(0);
        os.write(row.data(), bmp.width);
    }
}

void write_pbm(std::ostream& os, const PatternBitmap& bmp) {
    os << "P1\n" << bmp.width << " " << bmp.height << "\n";
    for (int r = 0; r < bmp.height; ++r) {
        for (int c = 0; c < bmp.width; ++c) {
            os.put(bmp.at(r, c) ? '1' : '0');
            if ((c + 1) % 64 == 0 && c + 1 < bmp.width) os.put('\n');
        }
        os.put('\n');
    }
}

DenseOrbit::DenseOrbit(const rules::FullRuleTable& rule, int max_steps)
    : rule_(rule), radius_(std::max(max_steps, 0)) {
    if (!rule.quiescent())
        throw std::invalid_argument("DenseOrbit: rule turns the all-zero background on");
    const int side = 2 * radius_ + 1;
    words_per_row_ = (side + 63) / 64;
    cur_.assign(std::size_t(side) * std::size_t(words_per_row_), 0);
    nxt_ = cur_;
    *word(cur_, 0, 0) |= std::uint64_t(1) << ((0 + radius_) & 63);
}

std::uint64_t* DenseOrbit::word(std::vector<std::uint64_t>& buf, int i, int j) {
    const int row = radius_ - j, col = i + radius_;
    return &buf[std::size_t(row) * std::size_t(words_per_row_) + std::size_t(col >> 6)];
}

bool DenseOrbit::get(const std::vector<std::uint64_t>& buf, int i, int j) const {
    if (i < -radius_ || i > radius_ || j < -radius_ || j > radius_) return false;
    const int row = radius_ - j, col = i + radius_;
    return buf[std::size_t(row) * std::size_t(words_per_row_) + std::size_t(col >> 6)] >>
               (col & 63) &
           1;
}

bool DenseOrbit::alive(int i, int j) const { return get(cur_, i, j); }

void DenseOrbit::advance() {
    const int s = time_ + 1;
    if (s > radius_) throw std::logic_error("DenseOrbit::advance: past max_steps");
    std::fill(nxt_.begin(), nxt_.end(), 0);
    std::uint64_t pop = 0;
    for (int j = -s; j <= s; ++j) {
        const int w = s - std::abs(j);
        for (int i = -w; i <= w; ++i) {
            const unsigned idx = unsigned(get(cur_, i, j + 1)) << 4 |
                                 unsigned(get(cur_, i - 1, j)) << 3 |
                                 unsigned(get(cur_, i, j)) << 2 |
                                 unsigned(get(cur_, i + 1, j)) << 1 |
                                 unsigned(get(cur_, i, j - 1));
            if (rule_.apply_index(idx)) {
                *word(nxt_, i, j) |= std::uint64_t(1) << ((i + radius_) & 63);
                ++pop;
            }
        }
    }
    cur_.swap(nxt_);
    population_ = pop;
    ++time_;
}

Configuration DenseOrbit::to_configuration() const {
    Configuration c;
    c.set_generation(time_);
    for (int j = -time_; j <= time_; ++j) {
        const int w = time_ - std::abs(j);
        for (int i = -w; i <= w; ++i)
            if (get(cur_, i, j)) c.set(i, j);
    }
    return c;
}

}  // namespace symca::grid
