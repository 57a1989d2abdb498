#ifndef RANDIC_FAMILIES_HPP
#define RANDIC_FAMILIES_HPP

#include <string>
#include <vector>

#include "randic/graph.hpp"
#include "randic/polynomial.hpp"
#include "randic/report.hpp"

namespace randic {

enum class Family { friendship, windmill4, windmill5, complete_bipartite_minus_edge };

std::string to_string(Family f);

/// A graph family member: (family, n) for the one-parameter families,
/// (family, m, n) for K_{m,n} - e.
struct FamilySpec {
    Family family;
    int m = 0;  // used by complete_bipartite_minus_edge only
    int n = 0;

    std::string str() const;
};

Graph family_graph(const FamilySpec& spec);

/// Exact value a + b*sqrt(c) with rational a, b and square-free integer c.
struct ExactRE {
    BigRat a;
    BigRat b;
    long radicand = 1;

    double value() const;
    std::string str() const;
    bool operator==(const ExactRE&) const = default;
};

/// Closed-form Randic energies:
///   friendship F_n        -> n + 1
///   windmill D_4^n        -> 2 + (n-1) sqrt(2)
///   windmill D_5^n        -> 1 + n sqrt(5)
///   K_{m,n} - e           -> 2 + 2/sqrt(mn)
ExactRE closed_form_re(const FamilySpec& spec);

/// Numeric RE of each family member with parameters up to max_n, compared
/// against the closed form within tol. Includes the boundary identities
/// RE(D_4^1) = RE(C_4) and RE(D_5^1) = RE(C_5).
CheckReport verify_closed_forms(int max_n, double tol = 1e-8);

struct Witness {
    FamilySpec spec;
    ExactRE re;
};

/// Family members with RE in [lo, hi], parameters capped at 10^4, reported in
/// increasing RE order and truncated to max_witnesses. Requires 2 <= lo < hi;
/// an empty list is a valid answer.
std::vector<Witness> density_probe(double lo, double hi, int max_witnesses = 1000);

/// [{"family","params","re_exact","re_float"}]
std::string witnesses_to_json(const std::vector<Witness>& ws);

}  // namespace randic

#endif
