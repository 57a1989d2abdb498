#ifndef RANDIC_VERIFY_HPP
#define RANDIC_VERIFY_HPP

#include "randic/report.hpp"

namespace randic {

/// Census counts: 1 class at n=4, 2 at n=6, 21 at n=10 with exactly 2
/// disconnected, and the product identities for the disconnected pair.
CheckReport verify_census();

/// Energy and Randic-energy equivalence classes at tol, the 3-eigenvalue
/// difference between paired classes, and the Petersen identification.
CheckReport verify_classes(double tol = 1e-6);

/// Windmill factorization: every numeric eigenvalue of R(D_m^n) is a root of
/// the L_{m-1}^{n-1} * RP(C_m) product for m in 3..6, n in 1..3, within tol;
/// degrees match the vertex count.
CheckReport verify_windmill(double tol = 1e-8);

/// Everything: tables, closed forms, census, classes, windmill.
CheckReport verify_all(double tables_tol = 2e-4);

}  // namespace randic

#endif
