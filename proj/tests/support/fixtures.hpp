#pragma once

// Small named systems and seeded random generators shared by the unit and
// acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lips/model.hpp"

namespace lips::testing {

inline Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

inline constexpr const char* kE1Document = R"({"m":2,"n":2,
 "constant":{"A":[["1","0"],["1","0"]],"b":["1","0"]},
 "parameters":[{"name":"p1","interval":["0","1"],
                "A":[["0","0"],["0","1"]],"b":["0","1"],
                "quantifier":"exists"}]})";

/// [[1,0],[1,p]] x = (1,p), p in [0,1].
inline ParametricSystem e1() {
    auto s = ParametricSystem::zero(2, 2);
    s.a0 = Matrix{{1, 0}, {1, 0}};
    s.b0 = vec({1, 0});
    auto& p = s.add_parameter("p1", Interval(0, 1));
    p.a = Matrix{{0, 0}, {0, 1}};
    p.b = vec({0, 1});
    return s;
}

/// [2,4] x = [-2,2]
inline ParametricSystem e2() {
    auto s = ParametricSystem::zero(1, 1);
    s.add_parameter("a", Interval(2, 4)).a = Matrix{{1}};
    s.add_parameter("b", Interval(-2, 2)).b = vec({1});
    return s;
}

/// [-1,1] x = 1
inline ParametricSystem e3() {
    auto s = ParametricSystem::zero(1, 1);
    s.b0 = vec({1});
    s.add_parameter("a", Interval(-1, 1)).a = Matrix{{1}};
    return s;
}

/// p x = q, p in [0,1] (forall), q in [-1,1] (exists).
inline QuantifiedSystem px_equals_q() {
    auto s = ParametricSystem::zero(1, 1);
    s.add_parameter("p", Interval(0, 1)).a = Matrix{{1}};
    s.add_parameter("q", Interval(-1, 1)).b = vec({1});
    QuantifierAssignment q;
    q.forall_set = {0};
    q.exists_set = {1};
    return {s, q};
}

/// 0 x = 1 exactly: empty solution set.
inline ParametricSystem infeasible_exact() {
    auto s = ParametricSystem::zero(1, 1);
    s.b0 = vec({1});
    return s;
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, long range, long max_den) {
    return ratio(uniform(rng, -range, range), uniform(rng, 1, max_den));
}

inline Vector random_point(Rng& rng, std::size_t n, long range = 6, long max_den = 2) {
    Vector v(n);
    for (auto& x : v) x = small_rational(rng, range, max_den);
    return v;
}

inline Vector random_integer_vector(Rng& rng, std::size_t n, long range = 3) {
    Vector v(n);
    for (auto& x : v) x = uniform(rng, -range, range);
    return v;
}

inline Interval random_interval(Rng& rng, long range = 3) {
    long a = uniform(rng, -range, range);
    long w = uniform(rng, 0, 2);
    return Interval(Rational(a), Rational(a + w));
}

/// One parameter per coefficient of an m x n interval system with integer
/// midpoints in [-3,3] and radii in {0, 1/2, 1}.
inline ParametricSystem random_ordinary(Rng& rng, std::size_t m = 2, std::size_t n = 2) {
    auto s = ParametricSystem::zero(m, n);
    const Rational radii[] = {0, ratio(1, 2), 1};
    int idx = 0;
    auto add = [&](std::size_t i, std::size_t j, bool rhs) {
        Rational mid = uniform(rng, -3, 3);
        Rational rad = radii[uniform(rng, 0, 2)];
        auto& p = s.add_parameter("c" + std::to_string(idx++), Interval(mid - rad, mid + rad));
        if (rhs) p.b[i] = 1;
        else p.a(i, j) = 1;
    };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) add(i, j, false);
        add(i, 0, true);
    }
    return s;
}

/// Each parameter's (A^(k) | b^(k)) lives in a single random row.
inline ParametricSystem random_first_class(Rng& rng, std::size_t m = 2, std::size_t n = 2) {
    auto s = ParametricSystem::zero(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.a0(i, j) = uniform(rng, -2, 2);
        s.b0[i] = uniform(rng, -2, 2);
    }
    const long k = uniform(rng, 1, 3);
    for (long t = 0; t < k; ++t) {
        auto& p = s.add_parameter("p" + std::to_string(t), random_interval(rng));
        const auto row = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1));
        for (std::size_t j = 0; j < n; ++j) p.a(row, j) = uniform(rng, -2, 2);
        p.b[row] = uniform(rng, -2, 2);
    }
    return s;
}

/// Dense generators, K <= max_k.
inline ParametricSystem random_general(Rng& rng, std::size_t m = 2, std::size_t n = 2, long max_k = 3) {
    auto s = ParametricSystem::zero(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.a0(i, j) = uniform(rng, -2, 2);
        s.b0[i] = uniform(rng, -2, 2);
    }
    const long k = uniform(rng, 1, max_k);
    for (long t = 0; t < k; ++t) {
        auto& p = s.add_parameter("p" + std::to_string(t), random_interval(rng));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) p.a(i, j) = uniform(rng, -1, 1);
            p.b[i] = uniform(rng, -1, 1);
        }
    }
    return s;
}

/// Matrix parameters with one nonzero row, rhs parameters with one nonzero entry.
inline ParametricSystem random_class_c(Rng& rng, std::size_t m = 2, std::size_t n = 2) {
    auto s = ParametricSystem::zero(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) s.a0(i, j) = uniform(rng, -2, 2);
    const long km = uniform(rng, 1, 3);
    for (long t = 0; t < km; ++t) {
        auto& p = s.add_parameter("p" + std::to_string(t), random_interval(rng));
        const auto row = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1));
        for (std::size_t j = 0; j < n; ++j) p.a(row, j) = uniform(rng, -2, 2);
    }
    const long kr = uniform(rng, 1, 2);
    for (long t = 0; t < kr; ++t) {
        auto& q = s.add_parameter("q" + std::to_string(t), random_interval(rng));
        q.b[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1))] = uniform(rng, -2, 2);
    }
    return s;
}

/// Random quantifier split with |K forall| <= 2 and |K exists| <= 2.
inline QuantifiedSystem random_ae(Rng& rng, std::size_t m = 2, std::size_t n = 2) {
    auto s = ParametricSystem::zero(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.a0(i, j) = uniform(rng, -2, 2);
        s.b0[i] = uniform(rng, -2, 2);
    }
    QuantifierAssignment q;
    const long na = uniform(rng, 1, 2);
    const long ne = uniform(rng, 1, 2);
    for (long t = 0; t < na + ne; ++t) {
        auto& p = s.add_parameter("p" + std::to_string(t), random_interval(rng));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) p.a(i, j) = uniform(rng, -1, 1);
            p.b[i] = uniform(rng, -2, 2);
        }
        (t < na ? q.forall_set : q.exists_set).push_back(static_cast<std::size_t>(t));
    }
    return {s, q};
}

/// Tolerable system with a known member x0 (q = 0 works at every p), and,
/// when `shared_kernel` is set, a common null vector of A0 and every A^(k).
struct TolerableInstance {
    TolerableSystem system;
    Vector member;
    std::optional<Vector> kernel_direction;
};

inline TolerableInstance random_tolerable(Rng& rng, bool shared_kernel) {
    const std::size_t m = 2, n = 2;
    TolerableInstance inst;
    Vector z = random_integer_vector(rng, n, 2);
    if (is_zero(z)) z[0] = 1;
    auto row = [&]() {
        Vector r = random_integer_vector(rng, n, 2);
        if (shared_kernel) r = scale(Rational(uniform(rng, -2, 2)), Vector{z[1], -z[0]});
        return r;
    };
    auto& base = inst.system.base;
    base = ParametricSystem::zero(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        Vector r = row();
        for (std::size_t j = 0; j < n; ++j) base.a0(i, j) = r[j];
    }
    inst.member = random_integer_vector(rng, n, 2);
    base.b0 = multiply(base.a0, inst.member);
    const long k = uniform(rng, 1, 2);
    for (long t = 0; t < k; ++t) {
        auto& p = base.add_parameter("p" + std::to_string(t), random_interval(rng, 2));
        for (std::size_t i = 0; i < m; ++i) {
            Vector r = row();
            for (std::size_t j = 0; j < n; ++j) p.a(i, j) = r[j];
        }
        p.b = multiply(p.a, inst.member);
    }
    const long l = uniform(rng, 1, 2);
    for (long t = 0; t < l; ++t) {
        long w = uniform(rng, 0, 2);
        RhsParameter q{"q" + std::to_string(t), Interval(Rational(-w), Rational(w)), random_integer_vector(rng, m, 2)};
        inst.system.rhs_params.push_back(std::move(q));
    }
    if (shared_kernel) inst.kernel_direction = z;
    return inst;
}

}  // namespace lips::testing
