#ifndef RANDIC_PERMANENT_HPP
#define RANDIC_PERMANENT_HPP

#include <vector>

#include "randic/graph.hpp"
#include "randic/polynomial.hpp"

namespace randic {

/// Square matrix of big integers. Capped at n <= 30: the permanent loop walks
/// 2^n column subsets.
class IntMatrix {
public:
    explicit IntMatrix(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int size() const { return n_; }
    const BigInt& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    BigInt& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_ = 0;
    std::vector<BigInt> a_;
};

/// Exact permanent by Ryser's inclusion-exclusion with Gray-code row-sum
/// updates: per(A) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} a_ij.
BigInt permanent_ryser(const IntMatrix& m);

/// Permanent of the adjacency matrix; g.n <= 30.
BigInt permanent_of_graph(const Graph& g);

}  // namespace randic

#endif
