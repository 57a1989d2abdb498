#include "randic/families.hpp"

#include <cmath>

#include "doctest.h"
#include "randic/spectral.hpp"
#include "randic/verify.hpp"

using namespace randic;

TEST_CASE("closed forms") {
    ExactRE f4 = closed_form_re({Family::friendship, 0, 4});
    CHECK(f4.a == 5);
    CHECK(f4.b == 0);
    CHECK(f4.value() == 5.0);
    CHECK(f4.str() == "5");

    ExactRE w43 = closed_form_re({Family::windmill4, 0, 3});
    CHECK(w43.a == 2);
    CHECK(w43.b == 2);
    CHECK(w43.radicand == 2);
    CHECK(w43.value() == doctest::Approx(4.8284).epsilon(1e-4));
    CHECK(w43.str() == "2 + 2*sqrt(2)");

    ExactRE w52 = closed_form_re({Family::windmill5, 0, 2});
    CHECK(w52.str() == "1 + 2*sqrt(5)");

    ExactRE k33 = closed_form_re({Family::complete_bipartite_minus_edge, 3, 3});
    CHECK(k33.a == 2);
    CHECK(k33.b == BigRat(2, 3));
    CHECK(k33.radicand == 1);
    CHECK(k33.value() == doctest::Approx(2.0 + 2.0 / 3.0).epsilon(1e-12));
    CHECK(k33.str() == "8/3");

    // mn = 8 = 2^2 * 2: b = 2/(2*2) = 1/2, radicand 2.
    ExactRE k24 = closed_form_re({Family::complete_bipartite_minus_edge, 2, 4});
    CHECK(k24.b == BigRat(1, 2));
    CHECK(k24.radicand == 2);
    CHECK(k24.str() == "2 + (1/2)*sqrt(2)");

    CHECK(closed_form_re({Family::windmill4, 0, 1}).str() == "2");
    CHECK(closed_form_re({Family::windmill5, 0, 1}).str() == "1 + sqrt(5)");

    CHECK_THROWS_AS(closed_form_re({Family::friendship, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_re({Family::complete_bipartite_minus_edge, 1, 3}),
                    std::invalid_argument);
}

TEST_CASE("family graphs") {
    CHECK(family_graph({Family::friendship, 0, 2}) == make_dutch_windmill(3, 2));
    CHECK(family_graph({Family::windmill5, 0, 3}) == make_dutch_windmill(5, 3));
    CHECK(family_graph({Family::complete_bipartite_minus_edge, 2, 2}) ==
          make_complete_bipartite_minus_edge(2, 2));
}

TEST_CASE("closed forms agree with the numeric eigensolver") {
    CHECK(verify_closed_forms(8, 1e-8).all_pass());
}

TEST_CASE("windmill factorization harness") {
    CHECK(verify_windmill(1e-8).all_pass());
}

TEST_CASE("bipartite family gap shrinks monotonically") {
    double prev = 2.0;  // larger than any gap below
    for (long t = 4; t <= 400; ++t) {
        // smallest factor >= 2; skip primes (no K_{m,n} realization).
        int m = 0;
        for (long d = 2; d * d <= t; ++d)
            if (t % d == 0) {
                m = static_cast<int>(d);
                break;
            }
        if (m == 0) continue;
        ExactRE re = closed_form_re(
            {Family::complete_bipartite_minus_edge, m, static_cast<int>(t / m)});
        double gap = re.value() - 2.0;
        CHECK(gap > 0.0);
        CHECK(gap < prev);
        prev = gap;
    }
    // Numeric spot checks at larger sizes.
    for (auto [m, n] : {std::pair{10, 20}, {20, 20}, {2, 128}}) {
        FamilySpec spec{Family::complete_bipartite_minus_edge, m, n};
        CHECK(std::abs(randic_energy(family_graph(spec)) - closed_form_re(spec).value()) <= 1e-8);
    }
}

TEST_CASE("density probe") {
    auto in_range = density_probe(5.0, 5.1);
    bool has_f4 = false;
    for (const auto& w : in_range)
        if (w.spec.family == Family::friendship && w.spec.n == 4) has_f4 = true;
    CHECK(has_f4);

    auto exact5 = density_probe(4.99, 5.01);
    REQUIRE(exact5.size() == 1);
    CHECK(exact5[0].spec.family == Family::friendship);
    CHECK(exact5[0].spec.n == 4);

    auto wide = density_probe(2.0, 3.0, 50);
    CHECK(wide.size() == 50);  // truncated to the cap
    bool has_k33 = false, has_k22 = false;
    for (const auto& w : density_probe(2.6, 3.0)) {
        if (w.spec.family == Family::complete_bipartite_minus_edge) {
            if (w.spec.m == 3 && w.spec.n == 3) has_k33 = true;
            if (w.spec.m == 2 && w.spec.n == 2) has_k22 = true;  // RE = 3, hi inclusive
        }
    }
    CHECK(has_k33);
    CHECK(has_k22);

    for (size_t i = 1; i < wide.size(); ++i)
        CHECK(wide[i - 1].re.value() <= wide[i].re.value());

    auto w42 = density_probe(3.4, 3.5);  // windmill4 n=2 at 2+sqrt(2)
    REQUIRE(w42.size() == 1);
    CHECK(w42[0].spec.family == Family::windmill4);
    CHECK(density_probe(3.3, 3.35).empty());  // a genuine gap; empty is valid
    CHECK_THROWS_AS(density_probe(1.5, 2.5), std::invalid_argument);
    CHECK_THROWS_AS(density_probe(2.5, 2.5), std::invalid_argument);

    std::string json = witnesses_to_json(exact5);
    CHECK(json.find("\"family\":\"friendship\"") != std::string::npos);
    CHECK(json.find("\"re_float\":5.0") != std::string::npos);
}
