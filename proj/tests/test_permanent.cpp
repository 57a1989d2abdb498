#include "randic/permanent.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "randic/errors.hpp"
#include "test_util.hpp"

using namespace randic;

namespace {

// Factorial-time oracle: expand along the rows.
BigInt permanent_naive(const IntMatrix& m, std::vector<int>& cols, int row) {
    if (row == m.size()) return BigInt(1);
    BigInt total(0);
    for (size_t k = 0; k < cols.size(); ++k) {
        if (m(row, cols[k]) == 0) continue;
        int c = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        total += m(row, c) * permanent_naive(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(k), c);
    }
    return total;
}

BigInt permanent_naive(const IntMatrix& m) {
    std::vector<int> cols(m.size());
    std::iota(cols.begin(), cols.end(), 0);
    return permanent_naive(m, cols, 0);
}

}  // namespace

TEST_CASE("permanent basics") {
    for (int n = 1; n <= 8; ++n) {
        IntMatrix eye(n);
        for (int i = 0; i < n; ++i) eye(i, i) = 1;
        CHECK(permanent_ryser(eye) == 1);
    }
    IntMatrix ones(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ones(i, j) = 1;
    CHECK(permanent_ryser(ones) == 6);

    CHECK(permanent_of_graph(Graph(4)) == 0);  // zero matrix
    CHECK_THROWS_AS(IntMatrix(31), SizeLimitError);
}

TEST_CASE("permanent of the printed G_1 matrix") {
    Graph g1(10, {{0, 1}, {0, 5}, {0, 9}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4},
                  {4, 5}, {5, 6}, {6, 7}, {6, 8}, {7, 8}, {7, 9}, {8, 9}});
    CHECK(permanent_of_graph(g1) == 72);
    CHECK(permanent_of_graph(make_petersen()) == 60);
}

TEST_CASE("ryser agrees with the naive oracle") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 2);
        CHECK(permanent_ryser(m) == permanent_naive(m));
    }
    // Also a few with general integer entries; Ryser is not 0/1-specific.
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 7) - 3;
        CHECK(permanent_ryser(m) == permanent_naive(m));
    }
}

TEST_CASE("permanent is invariant under vertex relabeling") {
    std::mt19937 rng(55);
    for (const Graph& g : {make_petersen(), test::random_graph(rng, 9, 0.5)}) {
        BigInt want = permanent_of_graph(g);
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<int, int>> edges;
            for (auto [i, j] : g.edges()) edges.emplace_back(perm[i], perm[j]);
            CHECK(permanent_of_graph(Graph(g.vertex_count(), edges)) == want);
        }
    }
}
