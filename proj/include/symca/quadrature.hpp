#pragma once

#include <iosfwd>
#include <optional>

#include "symca/rational.hpp"

namespace symca::quad {

struct RiemannReport {
    unsigned k;
    BigRat sum;
    BigRat target;
    BigRat error;  // |sum - target|, exact
    std::optional<BigRat> closed_error;
};

// Right-endpoint Riemann sum of F on the level-k dyadic grid,
//   sum = 2^{-k} sum_{t=1}^{2^k} F(t/2^k),
// accumulated from the census values (the grid telescopes to cum_a(2^k)/8^k).
// target = 1/9; closed_error = (1/18)(8 (5/8)^k + 9 2^{-k} - 4^{-k}), which
// the report checks equals the actual error exactly. 1 <= k <= 21.
RiemannReport riemann_sum_F(unsigned k);

// Same grid for G using the level-k normalized ratios G_k = num_b/num_b(2^k):
//   sum = cum_b(2^k) / (2^k num_b(2^k)), target = 1/6. No closed error form.
RiemannReport riemann_sum_G(unsigned k);

// Slow direct routes summing the series evaluators over the same grid;
// independent of the census tables. Intended for small k.
BigRat riemann_sum_F_direct(unsigned k);
BigRat riemann_sum_G_direct(unsigned k);

// Exact integral of the i-th series piece f_i, integrated interval by
// interval: (1/3) 8^{-i} sum_{m<2^{i-1}} 4^{popcount(m)}. Equals
// (1/24)(5/8)^{i-1}; consecutive pieces have ratio exactly 5/8. i >= 1.
BigRat integral_f_piece(unsigned i);

// Integral of H_k: zero (H_k is nonzero on finitely many points).
BigRat integral_H(unsigned k);

// Grid mean of H_k over the level-`grid_level` dyadics; a sanity probe that
// tends to zero, equal to ((5^k - 1) + 4^k) / (4^k 2^L).
BigRat integral_H_grid_mean(unsigned k, unsigned grid_level);

void write_report_csv(std::ostream& os, const RiemannReport& r);

}  // namespace symca::quad
