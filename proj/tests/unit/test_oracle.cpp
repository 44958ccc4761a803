#include <doctest.h>

#include <sstream>

#include "../support/fixtures.hpp"
#include "lips/error.hpp"
#include "lips/membership.hpp"
#include "lips/oracle.hpp"

using namespace lips;
using lips::testing::vec;

namespace {

QuantifierAssignment united(const ParametricSystem& s) { return QuantifierAssignment::all_existential(s.num_params()); }

RasterWindow e1_window() { return {Rational(-2), Rational(2), Rational(-6), Rational(1)}; }

}  // namespace

TEST_CASE("Fourier-Motzkin membership oracle on E1") {
    auto s = testing::e1();
    CHECK(fm_member_oracle(s, vec({1, -5})));
    CHECK_FALSE(fm_member_oracle(s, vec({1, 1})));

    auto pinned = ParametricSystem::zero(1, 1);
    pinned.a0 = Matrix{{1}};
    pinned.b0 = vec({2});
    pinned.add_parameter("far", Interval(100, 200)).a = Matrix{{0}};
    CHECK(fm_member_oracle(pinned, vec({2})));
}

TEST_CASE("Fourier-Motzkin oracle caps the parameter count") {
    auto s = ParametricSystem::zero(1, 1);
    for (std::size_t k = 0; k <= kMaxOracleParameters; ++k) s.add_parameter("p" + std::to_string(k), Interval(0, 1));
    CHECK_THROWS_AS(fm_member_oracle(s, vec({0})), CapExceeded);
}

TEST_CASE("AE vertex oracle") {
    auto [s, q] = testing::px_equals_q();
    CHECK(ae_vertex_oracle(s, q, vec({1})));
    CHECK_FALSE(ae_vertex_oracle(s, q, vec({2})));

    testing::Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testing::random_general(rng);
        for (int i = 0; i < 10; ++i) {
            Vector x = testing::random_point(rng, g.n, 3, 2);
            CHECK(ae_vertex_oracle(g, united(g), x) == fm_member_oracle(g, x));
        }
    }
}

TEST_CASE("solution cloud of E1") {
    auto cloud = sample_solution_cloud(testing::e1(), 5, 0);
    REQUIRE(cloud.size() == 4);
    CHECK(cloud[0] == vec({1, -3}));
    CHECK(cloud[1] == vec({1, -1}));
    CHECK(cloud[2] == Vector{1, ratio(-1, 3)});
    CHECK(cloud[3] == vec({1, 0}));
}

TEST_CASE("solution cloud of thin and E3 systems") {
    auto thin = ParametricSystem::zero(1, 1);
    thin.add_parameter("t", Interval(2, 2)).a = Matrix{{1}};
    thin.b0 = vec({4});
    auto pts = sample_solution_cloud(thin, 3, 0);
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) CHECK(p == vec({2}));

    auto e3 = sample_solution_cloud(testing::e3(), 3, 0);
    REQUIRE(e3.size() == 2);
    CHECK(e3[0] == vec({-1}));
    CHECK(e3[1] == vec({1}));
}

TEST_CASE("every cloud point is a member") {
    testing::Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = testing::random_general(rng);
        for (const auto& x : sample_solution_cloud(s, 4, 0)) CHECK(member_united(s, x).member);
    }
    // Large grids are subsampled deterministically.
    auto big = ParametricSystem::zero(1, 1);
    big.a0 = Matrix{{1}};
    for (int k = 0; k < 4; ++k) big.add_parameter("p" + std::to_string(k), Interval(0, 1)).b = vec({1});
    auto a = sample_solution_cloud(big, 10, 3);
    CHECK(a.size() <= 4096);
    CHECK(a == sample_solution_cloud(big, 10, 3));
}

TEST_CASE("raster of E1 marks the half column x1 = 1, x2 <= 0") {
    auto s = testing::e1();
    auto g = rasterize(s, united(s), e1_window(), 33, RasterSet::United);
    REQUIRE(g.x1.size() == 33);
    REQUIRE(g.x2.size() == 33);
    CHECK(g.x1[1] == ratio(-15, 8));
    for (std::size_t r = 0; r < 33; ++r)
        for (std::size_t c = 0; c < 33; ++c) CHECK(g.at(r, c) == (g.x1[c] == 1 && g.x2[r] <= 0));
}

TEST_CASE("kernel raster of E1 marks the column x1 = 0") {
    auto s = testing::e1();
    auto g = rasterize(s, united(s), e1_window(), 33, RasterSet::Kernel);
    for (std::size_t r = 0; r < 33; ++r)
        for (std::size_t c = 0; c < 33; ++c) CHECK(g.at(r, c) == (g.x1[c] == 0));
}

TEST_CASE("raster of an empty system is all false") {
    auto s = ParametricSystem::zero(1, 2);
    s.b0 = vec({1});
    auto g = rasterize(s, united(s), e1_window(), 9, RasterSet::United);
    for (bool b : g.member) CHECK_FALSE(b);
}

TEST_CASE("raster rejects bad input") {
    auto e3 = testing::e3();
    CHECK_THROWS_AS(rasterize(e3, united(e3), e1_window(), 9, RasterSet::United), InputError);
    auto e1 = testing::e1();
    CHECK_THROWS_AS(rasterize(e1, united(e1), e1_window(), kMaxRasterResolution + 1, RasterSet::United),
                    InputError);
    CHECK_THROWS_AS(rasterize(e1, united(e1), e1_window(), 9, RasterSet::Tolerable), PreconditionError);
}

TEST_CASE("raster CSV layout") {
    auto s = testing::e1();
    auto g = rasterize(s, united(s), {Rational(0), Rational(1), Rational(-1), Rational(0)}, 2, RasterSet::United);
    std::ostringstream out;
    write_raster_csv(g, out);
    CHECK(out.str() ==
          "x1,x2,member\n"
          "0/1,-1/1,0\n"
          "1/1,-1/1,1\n"
          "0/1,0/1,0\n"
          "1/1,0/1,1\n");
}

TEST_CASE("kernel membership is symmetric on symmetric boxes") {
    testing::Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = ParametricSystem::zero(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) s.a0(i, j) = testing::uniform(rng, -2, 2);
        for (int k = 0; k < 2; ++k) {
            long r = testing::uniform(rng, 0, 2);
            auto& p = s.add_parameter("p" + std::to_string(k), Interval(Rational(-r), Rational(r)));
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) p.a(i, j) = testing::uniform(rng, -1, 1);
        }
        auto h = homogenized(s);
        for (int i = 0; i < 10; ++i) {
            Vector y = testing::random_integer_vector(rng, 2, 3);
            CHECK(member_kernel(h, y).member == member_kernel(h, scale(-1, y)).member);
        }
    }
}
