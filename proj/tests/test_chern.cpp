#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaeta/chern.hpp"
#include "gaeta/rng.hpp"

using namespace gaeta;

namespace {

ChernCharacter random_char(Rng& rng) {
    return {Rational(rng.range(-6, 6), rng.range(1, 4)),
            Rational(rng.range(-12, 12), rng.range(1, 4)),
            Rational(rng.range(-30, 30), rng.range(1, 4))};
}

} // namespace

TEST_CASE("log form round-trips") {
    // ideal sheaf of n points
    LogChern i5 = to_log(ideal_points_char(5));
    CHECK(i5.mu == Rational(0));
    CHECK(i5.delta == Rational(5));
    // line bundle O(d) has Delta = 0
    for (long long d = -4; d <= 4; ++d) {
        LogChern l = to_log(line_bundle_char(d));
        CHECK(l.mu == Rational(d));
        CHECK(l.delta == Rational(0));
    }
    // (3, 2, -5) <-> (3, 2/3, 17/9): ch2 = 3(mu^2/2 - Delta) = -5, pinned by
    // chi = 3 + (3/2)*2 + ch2 = 1 for this class
    LogChern xi = log_of(3, Rational(2, 3), Rational(17, 9));
    ChernCharacter c = from_log(xi);
    CHECK(c.c1 == Rational(2));
    CHECK(c.ch2 == Rational(-5));
    CHECK(euler(c) == Rational(1));
    CHECK(to_log(c) == xi);

    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        ChernCharacter x = random_char(rng);
        if (x.r.signum() <= 0) continue;
        CHECK(from_log(to_log(x)) == x);
    }
    CHECK_THROWS_AS(to_log(ChernCharacter{Rational(0), Rational(1), Rational(0)}), failure);
}

TEST_CASE("twist, dual, serre_dual") {
    LogChern xi = log_of(3, Rational(2, 3), Rational(17, 9));
    LogChern sd = xi.serre_dual();
    CHECK(sd.mu == Rational(-11, 3));
    CHECK(sd.delta == Rational(17, 9));
    CHECK(xi.dual().dual() == xi);
    CHECK(xi.twist(2).twist(-2) == xi);
    CHECK(xi.twist(5).delta == xi.delta);
    CHECK(xi.dual().delta == xi.delta);
}

TEST_CASE("euler characteristic") {
    CHECK(euler(ideal_points_log(5)) == Rational(-4));
    CHECK(euler(log_of(3, Rational(2, 3), Rational(17, 9))) == Rational(1));
    for (long long d = 0; d <= 6; ++d)
        CHECK(euler(log_of(1, Rational(d), Rational(0))) == Rational((d + 1) * (d + 2) / 2));
    // linearity in ch coordinates
    Rng rng(4);
    for (int i = 0; i < 300; ++i) {
        ChernCharacter x = random_char(rng), y = random_char(rng);
        CHECK(euler(x + y) == euler(x) + euler(y));
        Rational s(rng.range(-5, 5));
        CHECK(euler(s * x) == s * euler(x));
    }
}

TEST_CASE("relative euler characteristic") {
    LogChern xi = log_of(3, Rational(2, 3), Rational(17, 9));
    LogChern t_minus1 = log_of(2, Rational(1, 2), Rational(3, 8));
    CHECK(rel_euler(t_minus1, xi) == Rational(-6));
    CHECK(rel_euler(log_of(1, Rational(1), Rational(0)), xi) == Rational(-4));
    // chi(E, E) = 1 for exceptional discriminant (1 - 1/r^2)/2
    for (long long r : {1LL, 2LL, 5LL, 13LL}) {
        Rational d = half(1) * (Rational(1) - Rational(1, r * r));
        LogChern e = log_of(r, Rational(3, 7), d);
        CHECK(rel_euler(e, e) == Rational(1));
    }
    // agreement with the character-level form chi(dual(u) tensor v)
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        ChernCharacter u = random_char(rng), v = random_char(rng);
        if (u.r.signum() <= 0 || v.r.signum() <= 0) continue;
        CHECK(rel_euler(to_log(u), to_log(v)) == chi_hom(u, v));
    }
}

TEST_CASE("pairing examples and symmetry") {
    CHECK(pairing(ideal_points_char(12), tangent_char(2)) == Rational(0));
    CHECK(pairing(ideal_points_char(6), line_bundle_char(2)) == Rational(0));
    Rng rng(6);
    ChernCharacter zero{Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 1000; ++i) {
        ChernCharacter u = random_char(rng), v = random_char(rng);
        CHECK(pairing(u, v) == pairing(v, u));
        CHECK(pairing(u, zero) == Rational(0));
    }
}

TEST_CASE("numerical Serre duality on random rational characters") {
    ChernCharacter omega = line_bundle_char(-3);
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        ChernCharacter v = random_char(rng), w = random_char(rng);
        CHECK(chi_hom(v, w) == chi_hom(w, v.tensor(omega)));
    }
}

TEST_CASE("orthogonal slope at Delta = 1/2") {
    Quadratic x12 = orthogonal_slope_at_half(ideal_points_log(12), Branch::larger);
    CHECK(x12.rational_part() == Rational(-3, 2));
    CHECK(x12.radical_coeff() == Rational(1, 2));
    CHECK(x12.radicand() == 101);
    Quadratic x6 = orthogonal_slope_at_half(ideal_points_log(6), Branch::larger);
    CHECK(x6.radicand() == 53);
    Quadratic xb = orthogonal_slope_at_half(log_of(1, Rational(0), Rational(1, 2)), Branch::larger);
    CHECK(xb.is_rational());
    CHECK(xb.rational_part() == Rational(0));
    // smaller branch mirrors through -mu - 3/2
    Quadratic lo = orthogonal_slope_at_half(ideal_points_log(12), Branch::smaller);
    CHECK(lo.compare(x12) < 0);
    CHECK_THROWS_AS(orthogonal_slope_at_half(log_of(1, Rational(0), Rational(-1)), Branch::larger),
                    failure);
}
