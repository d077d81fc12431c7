#include <doctest.h>

#include <cmath>
#include <random>

#include "polewarp/constants.hpp"
#include "polewarp/errors.hpp"
#include "polewarp/pole_warp.hpp"
#include "test_support.hpp"

using namespace polewarp;

namespace {

// Images of (0, 0, 1) for sigma = 0.3, evaluated at 40 digits:
// y = 1 - 2/1.09, z = 0.3 * 2/1.09.
constexpr double kNorthY = -0.8348623853211009174;
constexpr double kNorthZ = 0.5504587155963302752;

}  // namespace

TEST_CASE("WarpSigma validation") {
    CHECK_THROWS_AS(WarpSigma{0.0}, DomainError);
    CHECK_THROWS_AS(WarpSigma{-1.0}, DomainError);
    CHECK_THROWS_AS(WarpSigma{std::nan("")}, DomainError);
    CHECK_THROWS_AS(WarpSigma{INFINITY}, DomainError);
    CHECK(WarpSigma(0.3).in_validated_range());
    CHECK_FALSE(WarpSigma(1e-4).in_validated_range());
    CHECK_FALSE(WarpSigma(2e3).in_validated_range());
    CHECK(WarpSigma(4.0).inverse().value() == 0.25);
}

TEST_CASE("warp_poles examples") {
    for (double s : {0.05, 0.3, 1.0, 7.0}) {
        CHECK(warp_poles({0, -1, 0}, WarpSigma(s)) == Vec3{0, -1, 0});
        CHECK(warp_poles({0, 1, 0}, WarpSigma(s)) == Vec3{0, 1, 0});
    }
    const Vec3 n = warp_poles({0, 0, 1}, WarpSigma(0.3));
    CHECK(n.x == 0.0);
    CHECK(std::abs(n.y - kNorthY) < 1e-15);
    CHECK(std::abs(n.z - kNorthZ) < 1e-15);
    CHECK(std::abs(n.y - -0.8348624) < 1e-6);
    CHECK(std::abs(n.z - 0.5504587) < 1e-6);
}

TEST_CASE("warp_poles is the identity at sigma = 1 on the unit sphere") {
    for (const Vec3& p : testing::random_unit_points(20000, 1)) {
        REQUIRE(distance(warp_poles(p, WarpSigma(1.0)), p) <= 1e-12);
    }
}

TEST_CASE("warp_poles rejects the off-sphere singular ray") {
    CHECK_THROWS_AS(warp_poles({0.5, 1.0, 0.0}, WarpSigma(0.3)), DomainError);
    CHECK_THROWS_AS(warp_poles({0.0, 1.0, -2.0}, WarpSigma(2.0)), DomainError);
    CHECK_THROWS_AS(to_stereo_plane({0.0, 1.0, 0.0}, WarpSigma(1.0)), DomainError);
}

TEST_CASE("near-singular unit inputs snap to the limit") {
    const double eps = 1e-7;  // 1 - y ~ 5e-15 on the sphere
    const Vec3 p{eps, std::sqrt(1 - eps * eps), 0.0};
    CHECK(warp_snaps_to_limit(p));
    CHECK(warp_poles(p, WarpSigma(0.3)) == Vec3{0, 1, 0});
    // Off-sphere points near y = 1 are evaluated verbatim.
    CHECK_FALSE(warp_snaps_to_limit({eps, 1.0 - 1e-14, 3.0}));
    CHECK(is_finite(warp_poles({eps, 1.0 - 1e-14, 3.0}, WarpSigma(0.3))));
}

TEST_CASE("warp_poles is continuous at (0, 1, 0) along meridians") {
    for (double s : {0.1, 0.3, 3.0}) {
        for (double az : {0.0, 1.0, 2.5, -2.0}) {
            double prev = INFINITY;
            for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
                const Vec3 p{eps * std::cos(az), std::sqrt(1 - eps * eps), eps * std::sin(az)};
                const double d = distance(warp_poles(p, WarpSigma(s)), {0, 1, 0});
                CHECK(d < prev);
                prev = d;
            }
            CHECK(prev < 1e-3);
        }
    }
}

TEST_CASE("unwarp_poles inverts warp_poles") {
    const Vec3 p{0.6, 0.0, 0.8};
    CHECK(distance(unwarp_poles(warp_poles(p, WarpSigma(0.3)), WarpSigma(0.3)), p) <= 1e-9);
    CHECK(unwarp_poles({0, -1, 0}, WarpSigma(0.3)) == Vec3{0, -1, 0});
    const Vec3 back = unwarp_poles({0.0, -0.8348624, 0.5504587}, WarpSigma(0.3));
    CHECK(distance(back, {0, 0, 1}) < 1e-6);

    for (double s : {0.05, 0.3, 1.0, 20.0}) {
        for (const Vec3& q : testing::random_unit_points(5000, 9)) {
            if (q.y >= 1 - 1e-9) {
                continue;
            }
            REQUIRE(distance(unwarp_poles(warp_poles(q, WarpSigma(s)), WarpSigma(s)), q) <= 1e-9);
        }
    }
}

TEST_CASE("warp keeps unit points on the unit sphere") {
    for (double s : {0.05, 0.3, 3.0, 10.0}) {
        for (const Vec3& p : testing::random_unit_points(5000, 17)) {
            REQUIRE(std::abs(norm(warp_poles(p, WarpSigma(s))) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("expanded rational form agrees with the direct evaluation") {
    CHECK(warp_expanded_oracle({0, -1, 0}, WarpSigma(0.7)) == Vec3{0, -1, 0});
    CHECK_THROWS_AS(warp_expanded_oracle({0, 1, 0}, WarpSigma(0.7)), DomainError);
    for (double s : {0.05, 0.3, 1.0, 3.0}) {
        for (const Vec3& p : testing::random_unit_points(20000, 23)) {
            REQUIRE(distance(warp_expanded_oracle(p, WarpSigma(s)), warp_poles(p, WarpSigma(s))) <= 1e-12);
        }
    }
}

TEST_CASE("composing the expanded forms with sigma and 1/sigma reduces to the identity") {
    // On the unit sphere the composed denominator x^2 + y^2 + z^2 - 2y + 1 equals 2(1 - y),
    // so x' = -2x(y - 1) / (2(1 - y)) = x, and likewise for y and z.
    for (const Vec3& p : testing::random_unit_points(2000, 29)) {
        const double den = p.x * p.x + p.y * p.y + p.z * p.z - 2 * p.y + 1;
        REQUIRE(std::abs(den - 2 * (1 - p.y)) < 1e-14);
        const Vec3 once = warp_expanded_oracle(p, WarpSigma(0.3));
        const Vec3 twice = warp_expanded_oracle(once, WarpSigma(1 / 0.3));
        REQUIRE(distance(twice, p) < 1e-9);
    }
}

TEST_CASE("warped pole positions") {
    const PolePair p = warped_pole_positions(WarpSigma(0.3));
    CHECK(std::abs(p.north.y - kNorthY) < 1e-15);
    CHECK(std::abs(p.north.z - kNorthZ) < 1e-15);
    CHECK(std::abs(p.south.y - kNorthY) < 1e-15);
    CHECK(std::abs(p.south.z + kNorthZ) < 1e-15);

    const PolePair id = warped_pole_positions(WarpSigma(1.0));
    CHECK(distance(id.north, {0, 0, 1}) < 1e-15);
    CHECK(distance(id.south, {0, 0, -1}) < 1e-15);

    for (double s : {0.05, 0.2, 0.5, 0.9}) {
        const PolePair q = warped_pole_positions(WarpSigma(s));
        CHECK(q.north.y == doctest::Approx((s * s - 1) / (s * s + 1)));
        CHECK(q.north.z == doctest::Approx(2 * s / (1 + s * s)));
        CHECK(q.north.y < 0.0);
    }

    double prev = INFINITY;
    for (double s : {0.5, 0.3, 0.1}) {
        const PolePair q = warped_pole_positions(WarpSigma(s));
        const double sep = angle_between(q.north, q.south);
        CHECK(sep < prev);
        prev = sep;
    }

    const PolePair pre = pole_preimages(WarpSigma(0.3));
    CHECK(distance(warp_poles(pre.north, WarpSigma(0.3)), {0, 0, 1}) < 1e-12);
    CHECK(distance(warp_poles(pre.south, WarpSigma(0.3)), {0, 0, -1}) < 1e-12);
}

TEST_CASE("latitude circles map to circles") {
    for (double theta : {0.2, 0.9, 1.4, 2.2, 3.0}) {
        std::vector<Vec3> img;
        for (int k = 0; k < 256; ++k) {
            const double phi = kTwoPi * (k + 0.5) / 256;
            const Vec3 p{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
            img.push_back(warp_poles(p, WarpSigma(0.3)));
        }
        CHECK(testing::circle_fit_rms(img) <= 1e-9);
    }
}

TEST_CASE("warp preserves angles between tangent directions") {
    std::mt19937_64 rng(31);
    const double h = 1e-6;
    int tested = 0;
    while (tested < 300) {
        const Vec3 p = testing::random_unit(rng);
        if (1 - p.y < 1e-3) {
            continue;
        }
        const Vec3 t1 = testing::random_tangent(p, rng);
        const Vec3 t2 = testing::random_tangent(p, rng);
        for (double s : {0.1, 0.3, 4.0}) {
            auto image_tangent = [&](const Vec3& t) {
                const Vec3 fwd = warp_poles(p * std::cos(h) + t * std::sin(h), WarpSigma(s));
                const Vec3 bwd = warp_poles(p * std::cos(h) - t * std::sin(h), WarpSigma(s));
                return (fwd - bwd) / (2 * h);
            };
            const double before = angle_between(t1, t2);
            const double after = angle_between(image_tangent(t1), image_tangent(t2));
            REQUIRE(std::abs(after - before) <= 1e-5);
        }
        ++tested;
    }
}
