#include <doctest.h>

#include "../support/fixtures.hpp"
#include "lips/cones.hpp"
#include "lips/error.hpp"
#include "lips/io.hpp"
#include "lips/membership.hpp"
#include "lips/oracle.hpp"

using namespace lips;
using lips::testing::vec;

namespace {

const QuantifierAssignment& united(const ParametricSystem& s) {
    static thread_local QuantifierAssignment q;
    q = QuantifierAssignment::all_existential(s.num_params());
    return q;
}

// Exact check of both certificate kinds.
bool certificate_holds(const ParametricSystem& s, const QuantifierAssignment& q, const Vector& x,
                       const MembershipResult& r) {
    if (r.member) return validate_witness(s, x, r.certificate);
    return validate_certificate(s, q, x, r.certificate);
}

TolerableSystem unit_tolerance(Matrix a, Rational p_lo, Rational p_hi) {
    // p x = q with p in [p_lo, p_hi] (universal) and q in [-1, 1].
    TolerableSystem t;
    t.base = ParametricSystem::zero(1, 1);
    t.base.add_parameter("p", Interval(p_lo, p_hi)).a = std::move(a);
    t.rhs_params.push_back({"q", Interval(-1, 1), vec({1})});
    return t;
}

}  // namespace

TEST_CASE("E1 united membership with witnesses") {
    auto s = testing::e1();
    auto a = member_united(s, vec({1, 0}));
    REQUIRE(a.member);
    CHECK(a.certificate.kind == CertificateKind::Witness);
    CHECK(a.certificate.witness_p() == vec({1}));

    auto b = member_united(s, vec({1, -5}));
    REQUIRE(b.member);
    CHECK(b.certificate.witness_p() == Vector{ratio(1, 6)});
    CHECK(validate_witness(s, vec({1, -5}), b.certificate));

    auto c = member_united(s, vec({1, 1}));
    REQUIRE_FALSE(c.member);
    CHECK(c.certificate.kind == CertificateKind::Separator);
    CHECK(validate_certificate(s, united(s), vec({1, 1}), c.certificate));
    CHECK_THROWS_AS(member_united(s, vec({1})), InputError);
}

TEST_CASE("E1 kernel membership") {
    auto s = testing::e1();
    auto a = member_kernel(s, vec({0, -1}));
    REQUIRE(a.member);
    CHECK(a.certificate.witness_p() == vec({0}));
    CHECK_FALSE(member_kernel(s, vec({1, -1})).member);
    CHECK(member_kernel(s, vec({0, 0})).member);
    CHECK(member_kernel(testing::e2(), vec({0})).member);
    testing::Rng rng(3);
    for (int i = 0; i < 10; ++i) CHECK(member_kernel(testing::random_general(rng), vec({0, 0})).member);
}

TEST_CASE("strict kernel membership") {
    auto e3 = strict_kernel_member(testing::e3(), vec({1}));
    CHECK(e3.interior);
    CHECK(e3.eps == 1);

    auto e1 = strict_kernel_member(testing::e1(), vec({0, -1}));
    CHECK_FALSE(e1.interior);
    CHECK(e1.eps == 0);

    auto thin = ParametricSystem::zero(2, 2);
    thin.a0 = Matrix{{1, 0}, {0, 0}};
    thin.add_parameter("t", Interval(3, 3)).a = Matrix{{0, 0}, {1, 0}};
    CHECK_FALSE(strict_kernel_member(thin, vec({0, 1})).interior);
}

TEST_CASE("first-class characterization on E1") {
    auto s = testing::e1();
    CHECK(member_first_class(s, vec({1, -5})));
    CHECK_FALSE(member_first_class(s, vec({1, 1})));
    CHECK(member_first_class(s, vec({1, 0})));

    auto g = ParametricSystem::zero(2, 2);
    g.add_parameter("p", Interval(0, 1)).a = Matrix{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(member_first_class(g, vec({0, 0})), PreconditionError);
}

TEST_CASE("AE membership on p x = q") {
    auto [s, q] = testing::px_equals_q();
    CHECK(member_ae(s, q, vec({1})).member);
    auto r = member_ae(s, q, vec({2}));
    REQUIRE_FALSE(r.member);
    CHECK(r.certificate.kind == CertificateKind::Separator);
    CHECK(r.certificate.failing_vertex == vec({1}));
    CHECK(validate_certificate(s, q, vec({2}), r.certificate));
    const auto& sep = r.certificate.separator;
    for (std::size_t k = 0; k < sep.u.size(); ++k) CHECK(sep.u[k] * sep.v[k] == 0);
    CHECK_FALSE(is_zero(sep.w));

    auto ok = member_ae(s, q, vec({1}));
    CHECK(ok.certificate.witnesses.size() == 2);
    CHECK(validate_witness(s, vec({1}), ok.certificate));
}

TEST_CASE("AE kernel membership") {
    auto [s, q] = testing::px_equals_q();
    CHECK(member_ae_kernel(s, q, vec({0})).member);
    CHECK_FALSE(member_ae_kernel(s, q, vec({1})).member);

    auto zero_a = ParametricSystem::zero(2, 2);
    zero_a.b0 = vec({1, 2});
    zero_a.add_parameter("u", Interval(0, 1)).b = vec({1, 0});
    zero_a.add_parameter("e", Interval(0, 1)).b = vec({0, 1});
    QuantifierAssignment qa;
    qa.forall_set = {0};
    qa.exists_set = {1};
    CHECK(member_ae_kernel(zero_a, qa, vec({5, -3})).member);
}

TEST_CASE("AE membership caps the universal parameters") {
    auto s = ParametricSystem::zero(1, 1);
    QuantifierAssignment q;
    for (std::size_t k = 0; k <= kMaxUniversalParameters; ++k) {
        s.add_parameter("p" + std::to_string(k), Interval(0, 1));
        q.forall_set.push_back(k);
    }
    CHECK_THROWS_AS(member_ae(s, q, vec({0})), CapExceeded);
}

TEST_CASE("tolerable membership") {
    TolerableSystem x_eq_q;
    x_eq_q.base = ParametricSystem::zero(1, 1);
    x_eq_q.base.a0 = Matrix{{1}};
    x_eq_q.rhs_params.push_back({"q", Interval(-1, 1), vec({1})});
    CHECK(member_tolerable(x_eq_q, Vector{ratio(1, 2)}).member);
    CHECK_FALSE(member_tolerable(x_eq_q, vec({2})).member);

    auto pxq = unit_tolerance(Matrix{{1}}, 0, 1);
    CHECK(member_tolerable(pxq, vec({1})).member);
    auto r = member_tolerable(pxq, vec({3}));
    CHECK_FALSE(r.member);
    auto qs = as_quantified(pxq);
    CHECK(validate_certificate(qs.system, qs.quantifiers, vec({3}), r.certificate));
}

TEST_CASE("tolerable kernel") {
    auto pxq = unit_tolerance(Matrix{{1}}, 0, 1);
    CHECK(kernel_tolerable(pxq, vec({0})));
    CHECK_FALSE(kernel_tolerable(pxq, vec({1})));

    TolerableSystem thin;
    thin.base = ParametricSystem::zero(2, 2);
    thin.base.a0 = Matrix{{1, 0}, {0, 0}};
    thin.base.add_parameter("p", Interval(0, 0)).a = Matrix{{0, 0}, {0, 1}};
    thin.rhs_params.push_back({"q", Interval(-1, 1), vec({1, 0})});
    CHECK(kernel_tolerable(thin, vec({0, 1})));
}

TEST_CASE("validate_certificate on hand-made separators") {
    auto s = testing::e1();
    const auto& q = united(s);
    Certificate c;
    c.kind = CertificateKind::Separator;
    c.separator.w = vec({0, 1});
    CHECK(validate_certificate(s, q, vec({1, 1}), c));
    c.separator.w = vec({0, 0});
    CHECK_FALSE(validate_certificate(s, q, vec({1, 1}), c));

    Certificate w;
    w.kind = CertificateKind::Witness;
    w.witnesses.push_back(vec({1}));
    CHECK_THROWS_AS(validate_certificate(s, q, vec({1, 0}), w), PreconditionError);
}

TEST_CASE("united membership agrees with the Fourier-Motzkin oracle and special characterizations") {
    testing::Rng rng(101);
    int members = 0, total = 0;
    for (int trial = 0; trial < 60; ++trial) {
        ParametricSystem s;
        switch (trial % 3) {
            case 0: s = testing::random_ordinary(rng); break;
            case 1: s = testing::random_first_class(rng); break;
            default: s = testing::random_general(rng); break;
        }
        const auto cls = classify(s);
        for (int i = 0; i < 20; ++i) {
            Vector x = testing::random_point(rng, s.n, 4, 2);
            auto r = member_united(s, x);
            CAPTURE(serialize_system(s, united(s)));
            CAPTURE(format_vector(x));
            CHECK(r.member == fm_member_oracle(s, x));
            CHECK(certificate_holds(s, united(s), x, r));
            if (cls.has(ClassFlag::Ordinary)) CHECK(r.member == oettli_prager_member(s, x));
            if (cls.has(ClassFlag::FirstClass)) CHECK(r.member == member_first_class(s, x));
            members += r.member;
            ++total;
        }
    }
    CHECK(members > 0);
    CHECK(members < total);
}

TEST_CASE("strict kernel points are kernel points; the kernel is a cone") {
    testing::Rng rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        auto s = trial % 2 ? testing::random_general(rng) : testing::random_ordinary(rng);
        for (int i = 0; i < 10; ++i) {
            Vector y = testing::random_integer_vector(rng, s.n, 2);
            auto k = member_kernel(s, y);
            CHECK(k.member == member_kernel(s, scale(2, y)).member);
            CHECK(k.member == member_kernel(s, scale(ratio(1, 3), y)).member);
            auto strict = strict_kernel_member(s, y);
            if (strict.interior) {
                CHECK(k.member);
                CHECK(strict.eps > 0);
            }
            CHECK(certificate_holds(homogenized(s), united(s), y, k));
        }
    }
}

TEST_CASE("AE membership with no universal parameters is united membership") {
    testing::Rng rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = testing::random_general(rng);
        auto q = QuantifierAssignment::all_existential(s.num_params());
        for (int i = 0; i < 10; ++i) {
            Vector x = testing::random_point(rng, s.n, 3, 2);
            CHECK(member_ae(s, q, x).member == member_united(s, x).member);
        }
    }
}

TEST_CASE("AE membership with no existential parameters checks every vertex") {
    testing::Rng rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = testing::random_general(rng);
        QuantifierAssignment q;
        for (std::size_t k = 0; k < s.num_params(); ++k) q.forall_set.push_back(k);
        for (int i = 0; i < 10; ++i) {
            Vector x = testing::random_point(rng, s.n, 3, 2);
            bool expected = true;
            for (const auto& p : universal_vertices(s, q))
                expected = expected && multiply(s.matrix_at(p), x) == s.rhs_at(p);
            CHECK(member_ae(s, q, x).member == expected);
        }
    }
    // A system every vertex solves: all generators vanish at x = (1,1).
    auto s = ParametricSystem::zero(1, 2);
    s.a0 = Matrix{{1, 1}};
    s.b0 = vec({2});
    auto& p = s.add_parameter("p", Interval(-1, 1));
    p.a = Matrix{{1, -1}};
    QuantifierAssignment q;
    q.forall_set = {0};
    CHECK(member_ae(s, q, vec({1, 1})).member);
    CHECK_FALSE(member_ae(s, q, vec({2, 0})).member);
}

TEST_CASE("AE membership agrees with the vertex oracle and certificates are exact") {
    testing::Rng rng(505);
    int rejected = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto [s, q] = testing::random_ae(rng);
        for (int i = 0; i < 15; ++i) {
            Vector x = testing::random_point(rng, s.n, 3, 2);
            auto r = member_ae(s, q, x);
            CHECK(r.member == ae_vertex_oracle(s, q, x));
            CHECK(certificate_holds(s, q, x, r));
            rejected += !r.member;
        }
    }
    CHECK(rejected > 0);
}

TEST_CASE("separators survive scaling of the whole system") {
    testing::Rng rng(606);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = testing::random_general(rng);
        auto scaled = s;
        scaled.a0 = scale(3, s.a0);
        scaled.b0 = scale(3, s.b0);
        for (auto& p : scaled.params) {
            p.a = scale(3, p.a);
            p.b = scale(3, p.b);
        }
        for (int i = 0; i < 5; ++i) {
            Vector x = testing::random_point(rng, s.n, 3, 2);
            auto a = member_united(s, x);
            auto b = member_united(scaled, x);
            CHECK(a.member == b.member);
            CHECK(certificate_holds(scaled, united(s), x, b));
        }
    }
}
