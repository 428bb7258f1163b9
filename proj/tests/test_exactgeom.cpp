#include "rotset/errors.hpp"
#include "rotset/exactgeom.hpp"
#include "rotset/lp.hpp"
#include "support/caratheodory.hpp"
#include "support/random_geometry.hpp"

#include <doctest.h>

#include <random>

using namespace rotset;
using rotset::testing::caratheodory_contains;
using rotset::testing::caratheodory_vertices;

namespace {

HomologyVector V(std::initializer_list<std::string_view> c) { return HomologyVector::parse(c); }

RationalPolytope hull(std::vector<HomologyVector> pts) { return extreme_points(pts); }

}  // namespace

TEST_CASE("rational text format") {
    CHECK(format_rational(parse_rational("2/4")) == "1/2");
    CHECK(format_rational(parse_rational("-6/3")) == "-2");
    CHECK(format_rational(parse_rational("0/5")) == "0");
    CHECK(format_rational(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("lp: Beale's cycling example terminates under Bland's rule") {
    lp::Problem p;
    auto r = [](const char* s) { return parse_rational(s); };
    p.a = {{r("1"), r("0"), r("0"), r("1/4"), r("-8"), r("-1"), r("9")},
           {r("0"), r("1"), r("0"), r("1/2"), r("-12"), r("-1/2"), r("3")},
           {r("0"), r("0"), r("1"), r("0"), r("0"), r("1"), r("0")}};
    p.b = {0, 0, 1};
    p.c = {0, 0, 0, r("-3/4"), 20, r("-1/2"), 6};
    const auto sol = lp::solve(p);
    REQUIRE(sol.status == lp::Status::optimal);
    CHECK(sol.objective == r("-5/4"));
}

TEST_CASE("lp: infeasible and unbounded") {
    lp::Problem p;
    p.a = {{1, 1}};
    p.b = {-1};
    p.c = {0, 0};
    CHECK(lp::solve(p).status == lp::Status::infeasible);
    p.a = {{1, -1}};
    p.b = {0};
    p.c = {-1, 0};
    CHECK(lp::solve(p).status == lp::Status::unbounded);
}

TEST_CASE("extreme_points examples") {
    CHECK(hull({V({"0", "0"}), V({"1", "0"}), V({"1", "1"}), V({"1/2", "1/2"})}).vertices() ==
          std::vector{V({"0", "0"}), V({"1", "0"}), V({"1", "1"})});
    CHECK(hull({V({"3", "-1"})}).vertices() == std::vector{V({"3", "-1"})});

    const std::vector<HomologyVector> square = {V({"0", "0"}), V({"1", "0"}), V({"0", "1"}),
                                                V({"1", "1"}), V({"1/2", "1/2"})};
    // Brute-force oracle first, then the implementation.
    const auto expected = caratheodory_vertices(square);
    CHECK(expected == std::vector{V({"0", "0"}), V({"0", "1"}), V({"1", "0"}), V({"1", "1"})});
    CHECK(hull(square).vertices() == expected);
}

TEST_CASE("extreme_points errors and degenerate input") {
    std::vector<HomologyVector> none;
    CHECK_THROWS_AS(extreme_points(none), ModelError);
    CHECK_THROWS_AS(hull({V({"0", "0"}), V({"1", "0", "0"})}), ModelError);
    // Collinear and repeated points.
    CHECK(hull({V({"2", "2"}), V({"0", "0"}), V({"1", "1"}), V({"2", "2"})}).vertices() ==
          std::vector{V({"0", "0"}), V({"2", "2"})});
    CHECK(hull({V({"0", "0", "0", "0"})}) == RationalPolytope::point(HomologyVector(4)));
}

TEST_CASE("contains_point examples") {
    const auto tri = hull({V({"0", "0"}), V({"1", "0"}), V({"1", "1"})});
    CHECK(contains_point(tri, V({"1/2", "1/4"})));
    CHECK_FALSE(contains_point(tri, V({"0", "1"})));
    CHECK(contains_point(hull({V({"1", "0"}), V({"2", "0"})}), V({"3/2", "0"})));
    CHECK_THROWS_AS(contains_point(tri, V({"0", "0", "0"})), ModelError);

    const auto w = membership_witness(tri, V({"1/2", "1/4"}));
    REQUIRE(w);
    HomologyVector recon(2);
    Rational total = 0;
    for (std::size_t i = 0; i < tri.size(); ++i) {
        CHECK(sgn((*w)[i]) >= 0);
        recon += (*w)[i] * tri.vertices()[i];
        total += (*w)[i];
    }
    CHECK(total == 1);
    CHECK(recon == V({"1/2", "1/4"}));
}

TEST_CASE("affine_dim examples") {
    CHECK(affine_dim(hull({V({"5", "5"})})) == 0);
    CHECK(affine_dim(hull({V({"0", "0"}), V({"1", "0"}), V({"1", "1"})})) == 2);
    CHECK(affine_dim(hull({V({"0", "0", "0", "0"}), V({"1", "0", "0", "0"}), V({"0", "1", "0", "0"})})) == 2);
}

TEST_CASE("segment_covered examples") {
    const auto o = V({"0", "0"});
    const std::vector<RationalPolytope> halves = {hull({V({"0", "0"}), V({"1", "0"})}),
                                                  hull({V({"1", "0"}), V({"2", "0"})})};
    CHECK(segment_covered(o, V({"2", "0"}), halves));

    const std::vector<RationalPolytope> gapped = {hull({V({"0", "0"}), V({"9/10", "0"})}),
                                                  hull({V({"11/10", "0"}), V({"2", "0"})})};
    CHECK_FALSE(segment_covered(o, V({"2", "0"}), gapped));
    const auto gaps = segment_gaps(o, V({"2", "0"}), gapped);
    REQUIRE(gaps.size() == 1);
    CHECK(gaps[0].lo == parse_rational("9/20"));
    CHECK(gaps[0].hi == parse_rational("11/20"));
    CHECK_FALSE(gaps[0].lo_closed);
    CHECK_FALSE(gaps[0].hi_closed);

    const std::vector<RationalPolytope> tri = {hull({V({"0", "0"}), V({"1", "0"}), V({"1", "1"})})};
    CHECK(segment_covered(o, V({"1", "1"}), tri));
}

TEST_CASE("segment gaps at the ends") {
    const auto o = V({"0", "0"});
    const std::vector<RationalPolytope> far = {hull({V({"1", "0"}), V({"2", "0"})})};
    const auto gaps = segment_gaps(o, V({"1", "0"}), far);
    REQUIRE(gaps.size() == 1);
    CHECK(gaps[0].lo == 0);
    CHECK(gaps[0].hi == 1);
    CHECK(gaps[0].lo_closed);
    CHECK_FALSE(gaps[0].hi_closed);

    const std::vector<RationalPolytope> none;
    const auto all = segment_gaps(o, V({"1", "0"}), none);
    REQUIRE(all.size() == 1);
    CHECK(all[0].lo_closed);
    CHECK(all[0].hi_closed);

    // Degenerate segment.
    CHECK(segment_covered(V({"3/2", "0"}), V({"3/2", "0"}), far));
}

TEST_CASE("in_span examples") {
    const SubspaceBasis plane(4, {V({"1", "0", "0", "0"}), V({"0", "1", "0", "0"})});
    CHECK(in_span(plane, hull({V({"0", "0", "0", "0"}), V({"1", "0", "0", "0"}), V({"1", "1", "0", "0"})})));
    CHECK_FALSE(in_span(plane, hull({V({"0", "0", "1", "0"})})));
    CHECK(in_span(SubspaceBasis(4, {}), hull({V({"0", "0", "0", "0"})})));
    CHECK_THROWS_AS(SubspaceBasis(2, {V({"1", "2"}), V({"2", "4"})}), ModelError);
}

TEST_CASE("subspace sums") {
    const SubspaceBasis a(3, {V({"1", "0", "0"})});
    const SubspaceBasis b(3, {V({"1", "1", "0"}), V({"2", "0", "0"}) - V({"1", "0", "0"}) - V({"1", "0", "0"}) + V({"0", "0", "1"})});
    CHECK(a.sum(b).rank() == 3);
    CHECK(a.sum(a).rank() == 1);
}

TEST_CASE("property: extreme_points agrees with brute force and is idempotent") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const std::size_t count = 3 + trial % 6;
        auto pts = rotset::testing::random_points(rng, dim, count);
        // Add a few interior points so redundancy actually occurs.
        const auto base = pts;
        for (int extra = 0; extra < 2; ++extra) {
            const auto w = rotset::testing::random_weights(rng, base.size());
            HomologyVector p(dim);
            for (std::size_t i = 0; i < base.size(); ++i) p += w[i] * base[i];
            pts.push_back(p);
        }
        const auto poly = extreme_points(pts);
        CHECK(poly.vertices() == caratheodory_vertices(pts));
        CHECK(extreme_points(poly.vertices()) == poly);
    }
}

TEST_CASE("property: homogeneity under integer scaling") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 2 + trial % 4;
        auto pts = rotset::testing::random_points(rng, dim, 6);
        const Rational m = 1 + trial % 5;
        std::vector<HomologyVector> scaled;
        for (const auto& p : pts) scaled.push_back(m * p);
        const auto a = extreme_points(pts);
        const auto b = extreme_points(scaled);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(m * a.vertices()[i] == b.vertices()[i]);
        CHECK(affine_dim(a) == affine_dim(b));
    }
}

TEST_CASE("property: single-member segment coverage matches endpoint membership") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        const auto poly = extreme_points(rotset::testing::random_points(rng, dim, 5));
        auto combo = [&] {
            const auto w = rotset::testing::random_weights(rng, poly.size());
            HomologyVector p(dim);
            for (std::size_t i = 0; i < poly.size(); ++i) p += w[i] * poly.vertices()[i];
            return p;
        };
        const auto a = combo();
        const auto b = combo();
        const std::vector<RationalPolytope> fam = {poly};
        CHECK(segment_covered(a, b, fam) == (contains_point(poly, a) && contains_point(poly, b)));
        // Push b outside along a direction that increases past the maximum.
        const auto dir = rotset::testing::random_vector(rng, dim);
        if (dir.is_zero()) continue;
        Rational best = dir.dot(poly.vertices()[0]);
        for (const auto& v : poly.vertices()) best = std::max(best, dir.dot(v));
        const auto out = b + ((best - dir.dot(b)) / dir.dot(dir) + 1) * dir;
        CHECK_FALSE(contains_point(poly, out));
        CHECK_FALSE(segment_covered(a, out, fam));
    }
}
