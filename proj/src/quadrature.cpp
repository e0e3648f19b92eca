#include "symca/quadrature.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

#include "symca/census.hpp"
#include "symca/fractal.hpp"

namespace symca::quad {

namespace {

BigRat abs_rat(const BigRat& q) { return q < 0 ? BigRat(-q) : q; }

std::uint64_t grid_points(unsigned k) {
    if (k < 1 || k > 21) throw std::invalid_argument("riemann sum: k must be in [1, 21]");
    return std::uint64_t(1) << k;
}

}  // namespace

RiemannReport riemann_sum_F(unsigned k) {
    const std::uint64_t n = grid_points(k);
    const std::vector<std::uint64_t> num = census::num_a_table(n);
    unsigned long acc = 0;
    for (std::uint64_t t = 1; t <= n; ++t) acc += num[t];
    RiemannReport r;
    r.k = k;
    r.sum = make_rat(BigInt(acc), int_pow(8, k));
    r.target = make_rat(BigInt(1), BigInt(9));
    r.error = abs_rat(r.sum - r.target);
    const BigRat closed =
        (8 * make_rat(int_pow(5, k), int_pow(8, k)) + make_rat(BigInt(9), pow2(k)) -
         make_rat(BigInt(1), pow4(k))) /
        18;
    if (r.error != closed)
        throw std::logic_error("riemann_sum_F: closed error formula disagrees with the grid sum");
    r.closed_error = closed;
    return r;
}

RiemannReport riemann_sum_G(unsigned k) {
    const std::uint64_t n = grid_points(k);
    const std::vector<std::uint64_t> num = census::num_b_table(n);
    unsigned long acc = 0;
    for (std::uint64_t t = 1; t <= n; ++t) acc += num[t];
    RiemannReport r;
    r.k = k;
    r.sum = make_rat(BigInt(acc), pow2(k) * BigInt(num[n]));
    r.target = make_rat(BigInt(1), BigInt(6));
    r.error = abs_rat(r.sum - r.target);
    return r;
}

BigRat riemann_sum_F_direct(unsigned k) {
    const std::uint64_t n = grid_points(k);
    BigRat acc = 0;
    for (std::uint64_t t = 1; t <= n; ++t) acc += fractal::F_eval(fractal::Dyadic(t, k));
    return acc / BigRat(pow2(k));
}

BigRat riemann_sum_G_direct(unsigned k) {
    const std::uint64_t n = grid_points(k);
    BigRat acc = 0;
    for (std::uint64_t t = 1; t <= n; ++t) acc += fractal::G_eval(fractal::Dyadic(t, k));
    return acc / BigRat(pow2(k));
}

BigRat integral_f_piece(unsigned i) {
    if (i < 1 || i > 21) throw std::invalid_argument("integral_f_piece: i must be in [1, 21]");
    // f_i restricted to [(2m+1)/2^i, (2m+2)/2^i) is 4^{popcount(m)} ((2m+2)/2^i - x)^2,
    // whose integral over the interval is (1/3) 8^{-i}.
    BigInt weight_sum = 0;
    const std::uint64_t intervals = std::uint64_t(1) << (i - 1);
    for (std::uint64_t m = 0; m < intervals; ++m) weight_sum += pow4(unsigned(std::popcount(m)));
    return make_rat(weight_sum, 3 * int_pow(8, i));
}

BigRat integral_H(unsigned) { return BigRat(0); }

BigRat integral_H_grid_mean(unsigned k, unsigned grid_level) {
    if (grid_level > 20) throw std::invalid_argument("integral_H_grid_mean: grid too fine");
    const std::uint64_t n = std::uint64_t(1) << grid_level;
    BigRat acc = 0;
    for (std::uint64_t t = 1; t <= n; ++t)
        acc += fractal::H_eval(k, fractal::Dyadic(t, grid_level));
    return acc / BigRat(pow2(grid_level));
}

void write_report_csv(std::ostream& os, const RiemannReport& r) {
    os << r.k << ',' << r.sum.get_num() << ',' << r.sum.get_den() << ',' << rat_str(r.target)
       << ',' << decimal_str(r.error) << '\n';
}

}  // namespace symca::quad
