#include "randic/polynomial.hpp"

#include "doctest.h"
#include "randic/errors.hpp"
#include "test_util.hpp"

using namespace randic;

namespace {

IntPolynomial ipoly(std::vector<long> ascending) {
    std::vector<BigInt> v(ascending.begin(), ascending.end());
    return IntPolynomial(std::move(v));
}

RatPolynomial rpoly(std::vector<std::pair<long, long>> ascending) {
    std::vector<BigRat> v;
    for (auto [p, q] : ascending) v.emplace_back(p, q);
    return RatPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("polynomial ring basics") {
    IntPolynomial xm1 = ipoly({-1, 1}), xp1 = ipoly({1, 1});
    CHECK(xm1 * xp1 == ipoly({-1, 0, 1}));
    CHECK(xm1.pow(0) == IntPolynomial::one());
    CHECK((xm1 + xp1) == ipoly({0, 2}));
    CHECK((xm1 - xm1).is_zero());
    CHECK(ipoly({-2, -3, 0, 1}).eval(BigInt(2)) == 0);
    CHECK(ipoly({-2, -3, 0, 1}).eval(BigRat(1, 2)) == BigRat(-27, 8));
    CHECK(ipoly({}).degree() == -1);
    CHECK(ipoly({5}).degree() == 0);

    RatPolynomial q = rpoly({{-1, 4}, {0, 1}, {1, 1}});
    CHECK(q.pow(0) == RatPolynomial::one());
    CHECK(q.eval(BigRat(1, 2)) == 0);
    CHECK((q * RatPolynomial::one()) == q);
    // Coefficients are kept in lowest terms with positive denominators.
    RatPolynomial raw(std::vector<BigRat>{BigRat(2, 4), BigRat(3, -6)});
    CHECK(raw.coeff(0) == BigRat(1, 2));
    CHECK(raw.coeff(1) == BigRat(-1, 2));
    CHECK(raw.coeff(1).get_str() == "-1/2");
}

TEST_CASE("polynomial rendering") {
    CHECK(ipoly({-2, -3, 0, 1}).str() == "x^3 - 3x - 2");
    CHECK(ipoly({}).str() == "0");
    CHECK(ipoly({7}).str() == "7");
    CHECK(ipoly({0, -1}).str() == "-x");
    CHECK(rpoly({{1, 16}, {0, 1}, {-3, 4}, {0, 1}, {1, 1}}).str() ==
          "x^4 - (3/4)x^2 + 1/16");
    CHECK(ipoly({-2, -3, 0, 1}).coeff_strings() ==
          std::vector<std::string>{"-2", "-3", "0", "1"});
}

TEST_CASE("charpoly_adjacency known values") {
    CHECK(charpoly_adjacency(make_cycle(3)) == ipoly({-2, -3, 0, 1}));
    CHECK(charpoly_adjacency(Graph(4)) == ipoly({0, 0, 0, 0, 1}));  // empty graph
    CHECK(charpoly_adjacency(Graph(0)) == IntPolynomial::one());
    CHECK(charpoly_adjacency(make_petersen()) ==
          ipoly({48, -160, 120, 120, -165, -24, 75, 0, -15, 0, 1}));
}

TEST_CASE("charpoly trace identities on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = test::random_graph(rng, n, 0.5);
        IntPolynomial p = charpoly_adjacency(g);
        CHECK(p.degree() == n);
        CHECK(p.coeff(n) == 1);
        CHECK(p.coeff(n - 1) == 0);
        if (n >= 2) CHECK(p.coeff(n - 2) == -BigInt(g.edge_count()));
    }
}

TEST_CASE("charpoly is multiplicative over disjoint unions") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Graph a = test::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.5);
        Graph b = test::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.5);
        CHECK(charpoly_adjacency(disjoint_union({a, b})) ==
              charpoly_adjacency(a) * charpoly_adjacency(b));
    }
}

TEST_CASE("lambda recurrence") {
    CHECK(lambda_recurrence(1) == rpoly({{0, 1}, {1, 1}}));
    CHECK(lambda_recurrence(2) == rpoly({{-1, 4}, {0, 1}, {1, 1}}));
    CHECK(lambda_recurrence(3) == rpoly({{0, 1}, {-1, 2}, {0, 1}, {1, 1}}));
    CHECK(lambda_recurrence(4) == rpoly({{1, 16}, {0, 1}, {-3, 4}, {0, 1}, {1, 1}}));
    CHECK_THROWS_AS(lambda_recurrence(0), std::invalid_argument);

    const RatPolynomial x = RatPolynomial::monomial(BigRat(1), 1);
    const RatPolynomial quarter(std::vector<BigRat>{BigRat(1, 4)});
    for (int k = 3; k <= 40; ++k) {
        RatPolynomial lhs = lambda_recurrence(k) - x * lambda_recurrence(k - 1) +
                            quarter * lambda_recurrence(k - 2);
        CHECK(lhs.is_zero());
        CHECK(lambda_recurrence(k).degree() == k);
        CHECK(lambda_recurrence(k).coeff(k) == 1);
    }
}

TEST_CASE("randic charpoly of cycles") {
    RatPolynomial c3 = randic_charpoly_cycle(3);
    CHECK(c3 == rpoly({{-1, 4}, {-3, 4}, {0, 1}, {1, 1}}));
    // (x - 1)(x + 1/2)^2, multiplied back out.
    RatPolynomial factored = rpoly({{-1, 1}, {1, 1}}) * rpoly({{1, 2}, {1, 1}}).pow(2);
    CHECK(c3 == factored);

    CHECK(randic_charpoly_cycle(4) == rpoly({{0, 1}, {0, 1}, {-1, 1}, {0, 1}, {1, 1}}));
    CHECK_THROWS_AS(randic_charpoly_cycle(2), std::invalid_argument);

    for (int m = 3; m <= 30; ++m)
        CHECK(randic_charpoly_cycle(m) == randic_charpoly_regular(make_cycle(m), 2));
}

TEST_CASE("randic charpoly via regular scaling") {
    Graph k2(2, {{0, 1}});
    CHECK(randic_charpoly_regular(k2, 1) == rpoly({{-1, 1}, {0, 1}, {1, 1}}));

    // Petersen: RP = (x - 1)(x + 2/3)^4 (x - 1/3)^5.
    RatPolynomial want = rpoly({{-1, 1}, {1, 1}}) * rpoly({{2, 3}, {1, 1}}).pow(4) *
                         rpoly({{-1, 3}, {1, 1}}).pow(5);
    CHECK(randic_charpoly_regular(make_petersen(), 3) == want);

    CHECK_THROWS_AS(randic_charpoly_regular(make_petersen(), 2), RegularityError);
    CHECK_THROWS_AS(randic_charpoly_regular(make_complete_bipartite_minus_edge(2, 3), 2),
                    RegularityError);
    CHECK_THROWS_AS(randic_charpoly_regular(k2, 0), std::invalid_argument);
}

TEST_CASE("randic charpoly of windmills") {
    CHECK(randic_charpoly_windmill(4, 2) ==
          rpoly({{0, 1}, {0, 1}, {0, 1}, {1, 2}, {0, 1}, {-3, 2}, {0, 1}, {1, 1}}));
    CHECK(randic_charpoly_windmill(3, 1) == randic_charpoly_cycle(3));

    // Friendship: L_2^{n-1} (x - 1)(x + 1/2)^2.
    for (int n = 1; n <= 6; ++n) {
        RatPolynomial want = rpoly({{-1, 4}, {0, 1}, {1, 1}}).pow(n - 1) *
                             rpoly({{-1, 1}, {1, 1}}) * rpoly({{1, 2}, {1, 1}}).pow(2);
        CHECK(randic_charpoly_windmill(3, n) == want);
    }

    for (int m = 3; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n)
            CHECK(randic_charpoly_windmill(m, n).degree() == (m - 1) * n + 1);

    CHECK_THROWS_AS(randic_charpoly_windmill(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(randic_charpoly_windmill(3, 0), std::invalid_argument);
}
