#ifndef RANDIC_CATALOG_HPP
#define RANDIC_CATALOG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "randic/graph.hpp"
#include "randic/permanent.hpp"
#include "randic/polynomial.hpp"
#include "randic/report.hpp"

namespace randic {

/// Reference constants for the cubic-10 catalog, parsed from
/// paper_tables.json (embedded at build time, overridable from a file).
struct PaperTables {
    std::vector<std::string> names;                       // G_1 .. G_21
    std::map<std::string, IntPolynomial> table1;          // exact charpolys
    std::map<std::string, std::pair<double, double>> table2;  // printed (E, RE)
    std::map<std::string, BigInt> permanents;             // the six known values
    Graph printed_g1;                                     // explicit A(G_1)
};

const PaperTables& paper_tables();
PaperTables parse_paper_tables(const std::string& json_text);
/// Replace the process-wide tables (CLI --tables override). Call before any
/// catalog use.
void set_paper_tables(PaperTables tables);

/// One cospectrality class of 3-regular graphs on n vertices (n even,
/// 4 <= n <= 10), deduplicated by exact characteristic polynomial and sorted
/// by ascending coefficient vector. Deterministic.
std::vector<Graph> enumerate_cubic(int n);

struct CatalogEntry {
    std::string name;   // G_1 .. G_21
    int index = 0;      // 1 .. 21
    Graph graph;
    std::string graph6;
    IntPolynomial charpoly;
    double energy = 0.0;
    double randic_energy = 0.0;  // numeric path, not the E/3 shortcut
    BigInt permanent;
    bool connected = false;
};

/// Runs enumerate_cubic(10) and names each representative by the reference
/// polynomial it matches. Throws CatalogMismatchError unless the match is a
/// perfect bijection.
std::vector<CatalogEntry> build_catalog();

/// Cached build_catalog().
const std::vector<CatalogEntry>& catalog();

enum class EnergyKey { energy, randic };

struct EquivalenceClasses {
    std::vector<std::vector<std::string>> classes;  // ordered by first member index
    double tol = 0.0;
};

/// Single-linkage grouping of entries whose key values differ by <= tol.
EquivalenceClasses equivalence_classes(const std::vector<CatalogEntry>& entries,
                                       EnergyKey key, double tol);

/// Table checks: exact charpoly equality, printed energies within tol,
/// the six known permanents, and the explicit A(G_1) cross-check.
CheckReport verify_tables(double tol = 2e-4);

}  // namespace randic

#endif
