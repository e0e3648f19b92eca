#include <doctest.h>

#include <sstream>

#include "symca/census.hpp"
#include "symca/quadrature.hpp"

using namespace symca;
using namespace symca::quad;

namespace {

BigRat rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

}  // namespace

TEST_CASE("riemann sums of F telescope to the census") {
    CHECK(riemann_sum_F(1).sum == rat(5, 8));
    CHECK(riemann_sum_F(2).sum == rat(26, 64));
    for (unsigned k = 1; k <= 20; ++k) {
        const RiemannReport r = riemann_sum_F(k);
        CHECK(r.sum == make_rat(census::cum_a(k), int_pow(8, k)));
        CHECK(r.target == rat(1, 9));
        REQUIRE(r.closed_error.has_value());
        CHECK(r.error == *r.closed_error);
        // the same closed error, recomputed here from scratch
        const BigRat expected = (8 * make_rat(int_pow(5, k), int_pow(8, k)) +
                                 make_rat(BigInt(9), pow2(k)) - make_rat(BigInt(1), pow4(k))) /
                                18;
        CHECK(r.error == expected);
    }
    CHECK_THROWS_AS(riemann_sum_F(0), std::invalid_argument);
}

TEST_CASE("riemann error of F decreases and respects its envelope") {
    BigRat prev = riemann_sum_F(1).error;
    for (unsigned k = 2; k <= 20; ++k) {
        const BigRat err = riemann_sum_F(k).error;
        CHECK(err < prev);
        const BigRat envelope =
            rat(8, 18) * make_rat(int_pow(5, k), int_pow(8, k)) + rat(1, 2) * make_rat(BigInt(1), pow2(k));
        CHECK(err < envelope);
        prev = err;
    }
    // k = 10 lands at the documented error magnitude
    const BigRat e10 = riemann_sum_F(10).error;
    CHECK(e10 > rat(45, 10000));
    CHECK(e10 < rat(46, 10000));
}

TEST_CASE("direct series summation agrees with the census route") {
    for (unsigned k = 1; k <= 8; ++k) CHECK(riemann_sum_F_direct(k) == riemann_sum_F(k).sum);
}

TEST_CASE("riemann sums of G converge to one sixth") {
    CHECK(riemann_sum_G(1).sum == rat(3, 5));
    CHECK(riemann_sum_G(2).sum == rat(3, 7));
    for (unsigned k = 1; k <= 14; ++k) {
        const RiemannReport r = riemann_sum_G(k);
        CHECK(r.sum == make_rat(census::cum_b(k),
                                pow2(k) * census::num_b(std::uint64_t(1) << k)));
        CHECK_FALSE(r.closed_error.has_value());
    }
    BigRat prev = riemann_sum_G(2).error;
    for (unsigned k = 3; k <= 14; ++k) {
        const BigRat err = riemann_sum_G(k).error;
        CHECK(err < prev);
        prev = err;
    }
    CHECK(riemann_sum_G(12).error < rat(1, 100));
}

TEST_CASE("the direct G grid sum heads to the same limit") {
    BigRat prev(1);
    for (unsigned k = 2; k <= 8; k += 2) {
        BigRat gap = riemann_sum_G_direct(k) - rat(1, 6);
        if (gap < 0) gap = -gap;
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < rat(1, 20));
}

TEST_CASE("piece integrals") {
    CHECK(integral_f_piece(1) == rat(1, 24));
    CHECK(integral_f_piece(2) == rat(5, 192));
    BigRat sum = 0;
    for (unsigned i = 1; i <= 12; ++i) {
        const BigRat v = integral_f_piece(i);
        CHECK(v == rat(1, 24) * make_rat(int_pow(5, i - 1), int_pow(8, i - 1)));
        if (i > 1) CHECK(v / integral_f_piece(i - 1) == rat(5, 8));
        sum += v;
    }
    CHECK(sum < rat(1, 9));
    CHECK(sum > rat(1, 9) - make_rat(int_pow(5, 12), int_pow(8, 12)));
    CHECK_THROWS_AS(integral_f_piece(0), std::invalid_argument);
}

TEST_CASE("integral of H_k vanishes and the grid mean shrinks") {
    CHECK(integral_H(0) == 0);
    CHECK(integral_H(3) == 0);
    const BigRat mean = integral_H_grid_mean(3, 10);
    CHECK(mean == make_rat(BigInt(124 + 64), pow4(3) * pow2(10)));
    CHECK(mean <= make_rat(pow2(3), pow2(10)));
    CHECK(integral_H_grid_mean(3, 12) < mean);
}

TEST_CASE("report csv row format") {
    std::ostringstream os;
    write_report_csv(os, riemann_sum_F(1));
    CHECK(os.str() == "1,5,8,1/9,0.51388888888888889\n");
}
