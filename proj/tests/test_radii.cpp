#include <doctest.h>

#include "jradii/radii.hpp"
#include "jradii/verify.hpp"

#include <cmath>

using namespace jradii;

TEST_SUITE_BEGIN("radii");

TEST_CASE("simplex inner radius") {
    CHECK(simplex_inner_radius(3, 3).value == SqrtRational(1, 12));
    CHECK(simplex_inner_radius(1, 5).value == SqrtRational(1, 2));
    CHECK(simplex_inner_radius(2, 7).value == SqrtRational(1, 6));
    CHECK(simplex_inner_radius(2, 7).kind == RadiusKind::Exact);
    CHECK_THROWS_AS(simplex_inner_radius(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(simplex_inner_radius(4, 3), std::invalid_argument);
}

TEST_CASE("simplex lower bound") {
    CHECK(simplex_lower_bound(1, 2) == SqrtRational(1, 3));
    CHECK(simplex_lower_bound(2, 5) == SqrtRational(1, 3));
    for (int d = 1; d <= 20; ++d)
        CHECK(simplex_lower_bound(d, d) == simplex_outer_radius(d, d).value);
}

TEST_CASE("simplex outer radius on named cases") {
    CHECK(simplex_outer_radius(3, 3).value == SqrtRational(3, 4));
    CHECK(simplex_outer_radius(3, 3).kind == RadiusKind::Exact);

    CHECK(simplex_outer_radius(1, 4).value == SqrtRational(5, 24));
    CHECK(simplex_outer_radius(1, 4).kind == RadiusKind::Exact);

    CHECK(simplex_outer_radius(5, 10).value == SqrtRational(5, 11));
    CHECK(simplex_outer_radius(5, 10).kind == RadiusKind::LowerBoundOnly);

    CHECK(simplex_outer_radius(4, 8).value == SqrtRational(4, 9));
    CHECK(simplex_outer_radius(4, 8).kind == RadiusKind::Exact);

    CHECK(simplex_outer_radius(3, 4).kind == RadiusKind::ExternallyResolved);
    CHECK(simplex_outer_radius(6, 12).kind == RadiusKind::LowerBoundOnly);
}

TEST_CASE("simplex outer radius closed forms for d <= 50") {
    for (int d = 1; d <= 50; ++d) {
        CHECK(simplex_outer_radius(d, d).value == SqrtRational(d, d + 1));
        if (d % 2 == 1) {
            CHECK(simplex_outer_radius(1, d).value == SqrtRational(1, d + 1));
            if (d >= 2)
                CHECK(simplex_outer_radius(d - 1, d).value == SqrtRational(d - 1, d + 1));
        } else {
            CHECK(simplex_outer_radius(1, d).value == SqrtRational(d + 1, BigInt(d) * (d + 2)));
            // exact even-d width strictly exceeds the bound
            CHECK(simplex_outer_radius(1, d).value > simplex_lower_bound(1, d));
        }
    }
}

TEST_CASE("outer radius is monotone in j; inner box radius is antitone") {
    BoxSpec box = BoxSpec::from_half_widths({0.5, 1.25, 2.0, 3.5});
    for (int d : {7, 12}) {
        for (int j = 1; j < d; ++j) {
            CHECK(simplex_outer_radius(j, d).value <= simplex_outer_radius(j + 1, d).value);
        }
    }
    for (int j = 1; j < box.dim(); ++j) {
        CHECK(box_outer_radius(box, j).value <= box_outer_radius(box, j + 1).value);
        CHECK(box_inner_radius(box, j).value >= box_inner_radius(box, j + 1).value);
    }
}

TEST_CASE("box spec validation and canonicalization") {
    CHECK_THROWS_AS(BoxSpec::from_half_widths({1.0, -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(BoxSpec::from_half_widths({}), std::invalid_argument);
    BoxSpec spec = BoxSpec::from_half_widths({3.0, 1.0, 2.0});
    CHECK(spec.half_widths() == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("box inner radius with k-selection") {
    for (int d : {2, 3, 5, 9}) {
        BoxSpec cube = BoxSpec::unit(d);
        for (int j = 1; j <= d; ++j)
            CHECK(box_inner_radius(cube, j).value == SqrtRational(d, j));
    }
    CHECK(box_inner_radius(BoxSpec::from_half_widths({3, 4, 5}), 2).value == SqrtRational(25, 1));
    CHECK(box_inner_radius(BoxSpec::from_half_widths({1, 1, 10}), 2).value == SqrtRational(2, 1));
}

TEST_CASE("box outer radius") {
    for (int d : {2, 4, 7}) {
        BoxSpec cube = BoxSpec::unit(d);
        for (int j = 1; j <= d; ++j)
            CHECK(box_outer_radius(cube, j).value == SqrtRational(j, 1));
    }
    CHECK(box_outer_radius(BoxSpec::from_half_widths({1, 2, 3}), 2).value == SqrtRational(5, 1));
    CHECK(box_outer_radius(BoxSpec::from_half_widths({1, 2, 3}), 3).value == SqrtRational(14, 1));
}

TEST_CASE("cross-polytope radii") {
    for (int d : {2, 3, 6}) {
        BoxSpec unit = BoxSpec::unit(d);
        for (int j = 1; j <= d; ++j) {
            CHECK(cross_outer_radius(unit, j).value == SqrtRational(j, d));
            CHECK(cross_inner_radius(unit, j).value == SqrtRational(1, j));
        }
    }
    // exact rational semi-axes: reciprocal of the (3,4,5) box
    std::vector<BigRational> thirds{BigRational(1, 3), BigRational(1, 4), BigRational(1, 5)};
    BoxSpec spec = BoxSpec::from_rational_half_widths(thirds);
    CHECK(cross_outer_radius(spec, 2).value == SqrtRational(1, 25));
}

TEST_CASE("cross inner radius: longest inscribed segment") {
    BoxSpec spec = BoxSpec::from_half_widths({1, 2});
    RadiusResult r = cross_inner_radius(spec, 1);
    // the long semi-axis itself is the largest inscribed segment
    CHECK(r.value == SqrtRational(4, 1));

    // directional sweep oracle: a segment along u fits up to 1/sum(|u_i|/a_i)
    double best = 0.0;
    for (int step = 0; step <= 2000; ++step) {
        const double phi = step * 1.5707963267948966 / 2000.0;
        const double len = 1.0 / (std::cos(phi) / 1.0 + std::sin(phi) / 2.0);
        best = std::max(best, len);
    }
    CHECK(r.value.value() == doctest::Approx(best).epsilon(1e-6));

    // full-dimensional inradius formula at j = d
    BoxSpec s2 = BoxSpec::from_half_widths({1, 2});
    // r_2(X_{1,2}) = prod/(sqrt(sum of squared co-products)) = 2/sqrt(5)
    CHECK(cross_inner_radius(s2, 2).value == SqrtRational(4, 5));
}

TEST_CASE("scaling covariance for rational scale factors") {
    std::vector<BigRational> base{BigRational(2, 3), BigRational(5, 4), BigRational(7, 2)};
    const BigRational lambda(3, 7);
    std::vector<BigRational> scaled = base;
    for (auto& v : scaled) v *= lambda;
    BoxSpec a = BoxSpec::from_rational_half_widths(base);
    BoxSpec b = BoxSpec::from_rational_half_widths(scaled);
    for (int j = 1; j <= 3; ++j) {
        CHECK(box_inner_radius(b, j).value.square() ==
              lambda * lambda * box_inner_radius(a, j).value.square());
        CHECK(box_outer_radius(b, j).value.square() ==
              lambda * lambda * box_outer_radius(a, j).value.square());
        CHECK(cross_outer_radius(b, j).value.square() ==
              lambda * lambda * cross_outer_radius(a, j).value.square());
        CHECK(cross_inner_radius(b, j).value.square() ==
              lambda * lambda * cross_inner_radius(a, j).value.square());
    }
}

TEST_CASE("duality sweep is exact up to d = 50") {
    for (int d = 1; d <= 50; ++d)
        for (int j = 1; j <= d; ++j) {
            DualityReport rep = duality_check(j, d);
            CAPTURE(j);
            CAPTURE(d);
            CHECK(rep.pass);
        }
}

TEST_SUITE_END();
