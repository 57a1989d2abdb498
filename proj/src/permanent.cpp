#include "randic/permanent.hpp"

#include <bit>
#include <stdexcept>

#include "randic/errors.hpp"

namespace randic {

namespace {
constexpr int kMaxPermanentSize = 30;
}

IntMatrix::IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, BigInt(0)) {
    if (n < 0) throw std::invalid_argument("IntMatrix: negative size");
    if (n > kMaxPermanentSize)
        throw SizeLimitError("IntMatrix: n > 30 unsupported (2^n subset loop)");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("IntMatrix::from_rows: not square");
        for (size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = static_cast<long>(rows[i][j]);
    }
    return m;
}

BigInt permanent_ryser(const IntMatrix& m) {
    const int n = m.size();
    if (n == 0) return BigInt(1);  // empty product over the empty permutation

    // per(A) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} a_ij,
    // with Gray-code order so each step updates the row sums by one column.
    std::vector<BigInt> row_sums(n, BigInt(0));
    BigInt total(0), prod;
    uint64_t gray = 0;
    const uint64_t end = uint64_t(1) << n;
    for (uint64_t k = 1; k < end; ++k) {
        int j = std::countr_zero(k);
        gray ^= uint64_t(1) << j;
        bool added = gray & (uint64_t(1) << j);
        for (int i = 0; i < n; ++i) {
            if (added)
                row_sums[i] += m(i, j);
            else
                row_sums[i] -= m(i, j);
        }
        prod = 1;
        for (int i = 0; i < n; ++i) {
            prod *= row_sums[i];
            if (prod == 0) break;
        }
        if (std::popcount(gray) & 1)
            total -= prod;
        else
            total += prod;
    }
    if (n & 1) total = -total;
    return total;
}

BigInt permanent_of_graph(const Graph& g) {
    if (g.vertex_count() > kMaxPermanentSize)
        throw SizeLimitError("permanent_of_graph: n > 30 unsupported");
    IntMatrix m(g.vertex_count());
    for (auto [i, j] : g.edges()) {
        m(i, j) = 1;
        m(j, i) = 1;
    }
    return permanent_ryser(m);
}

}  // namespace randic
