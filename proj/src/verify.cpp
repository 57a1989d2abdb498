#include "randic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "randic/catalog.hpp"
#include "randic/families.hpp"
#include "randic/graph.hpp"
#include "randic/polynomial.hpp"
#include "randic/spectral.hpp"

namespace randic {

namespace {

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int m, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph(m + n, std::move(edges));
}

Graph make_prism() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

std::string join(const std::vector<std::string>& names) {
    std::string s;
    for (const auto& n : names) {
        if (!s.empty()) s += ",";
        s += n;
    }
    return s;
}

}  // namespace

CheckReport verify_census() {
    CheckReport report;

    auto reps4 = enumerate_cubic(4);
    report.add("census-n4", reps4.size() == 1,
               std::to_string(reps4.size()) + " class (expected 1: K_4)");
    bool k4_match = reps4.size() == 1 && charpoly_adjacency(reps4[0]) == charpoly_adjacency(make_complete(4));
    report.add("census-n4-is-k4", k4_match, "charpoly equals P(K_4)");

    auto reps6 = enumerate_cubic(6);
    std::set<std::vector<std::string>> polys6;
    for (const auto& g : reps6) polys6.insert(charpoly_adjacency(g).coeff_strings());
    bool n6_members = polys6.count(charpoly_adjacency(make_complete_bipartite(3, 3)).coeff_strings()) &&
                      polys6.count(charpoly_adjacency(make_prism()).coeff_strings());
    report.add("census-n6", reps6.size() == 2,
               std::to_string(reps6.size()) + " classes (expected 2: K_{3,3}, prism)");
    report.add("census-n6-members", n6_members, "K_{3,3} and prism polynomials found");

    const auto& entries = catalog();
    report.add("census-n10", entries.size() == 21, std::to_string(entries.size()) + " classes");
    std::vector<std::string> disconnected;
    for (const auto& e : entries)
        if (!e.connected) disconnected.push_back(e.name);
    report.add("census-n10-disconnected", disconnected.size() == 2,
               join(disconnected) + " (expected 2)");

    // The two disconnected classes factor as K_4 x prism and K_4 x K_{3,3}.
    IntPolynomial k4 = charpoly_adjacency(make_complete(4));
    std::set<std::vector<std::string>> want{(k4 * charpoly_adjacency(make_prism())).coeff_strings(),
                                            (k4 * charpoly_adjacency(make_complete_bipartite(3, 3)))
                                                .coeff_strings()};
    std::set<std::vector<std::string>> got;
    for (const auto& e : entries)
        if (!e.connected) got.insert(e.charpoly.coeff_strings());
    report.add("census-n10-disconnected-factorization", want == got,
               "disconnected charpolys equal P(K_4)P(prism) and P(K_4)P(K_{3,3})");
    return report;
}

CheckReport verify_classes(double tol) {
    CheckReport report;
    const auto& entries = catalog();

    const std::vector<std::vector<std::string>> pairs{
        {"G_1", "G_8"}, {"G_12", "G_17"}, {"G_16", "G_20"}};

    for (EnergyKey key : {EnergyKey::energy, EnergyKey::randic}) {
        std::string tag = key == EnergyKey::energy ? "energy" : "randic-energy";
        EquivalenceClasses cls = equivalence_classes(entries, key, tol);
        int singletons = 0;
        std::vector<std::vector<std::string>> found_pairs;
        for (const auto& c : cls.classes) {
            if (c.size() == 1)
                ++singletons;
            else
                found_pairs.push_back(c);
        }
        bool ok = singletons == 15 && found_pairs == pairs;
        std::string detail = std::to_string(cls.classes.size()) + " classes, pairs:";
        for (const auto& p : found_pairs) detail += " {" + join(p) + "}";
        report.add("classes-" + tag, ok, detail);
    }

    auto entry = [&](const std::string& name) {
        return *std::find_if(entries.begin(), entries.end(),
                             [&](const CatalogEntry& e) { return e.name == name; });
    };
    for (const auto& p : pairs) {
        Spectrum a = eigenvalues_symmetric(adjacency_matrix(entry(p[0]).graph));
        Spectrum b = eigenvalues_symmetric(adjacency_matrix(entry(p[1]).graph));
        int diff = spectra_difference(a, b, 1e-6);
        report.add("classes-spectra-difference-" + p[0] + "-" + p[1], diff == 3,
                   std::to_string(diff) + " differing eigenvalues (expected 3)");
    }

    // Petersen: energy 16 plus spectrum (3, 1^5, (-2)^4) pins G_17 uniquely.
    Spectrum petersen{std::vector<double>{3, 1, 1, 1, 1, 1, -2, -2, -2, -2}, 0.0};
    std::vector<std::string> energy16, pinned;
    for (const auto& e : entries) {
        if (std::abs(e.energy - 16.0) <= 1e-9) {
            energy16.push_back(e.name);
            Spectrum s = eigenvalues_symmetric(adjacency_matrix(e.graph));
            if (spectra_difference(s, petersen, 1e-6) == 0) pinned.push_back(e.name);
        }
    }
    bool pet_ok = energy16.size() == 2 && pinned == std::vector<std::string>{"G_17"};
    report.add("petersen-identification", pet_ok,
               "energy-16 entries: {" + join(energy16) + "}, spectrum match: {" + join(pinned) +
                   "}");
    bool pet_poly = charpoly_adjacency(make_petersen()) == entry("G_17").charpoly;
    report.add("petersen-charpoly-is-g17", pet_poly, "P(Petersen) equals the G_17 polynomial");
    return report;
}

CheckReport verify_windmill(double tol) {
    CheckReport report;
    for (int m = 3; m <= 6; ++m) {
        for (int n = 1; n <= 3; ++n) {
            Graph g = make_dutch_windmill(m, n);
            RatPolynomial rp = randic_charpoly_windmill(m, n);
            bool degree_ok = rp.degree() == g.vertex_count() &&
                             g.vertex_count() == (m - 1) * n + 1;
            Spectrum s = eigenvalues_symmetric(randic_matrix(g));
            double worst = 0.0;
            for (double rho : s.values) worst = std::max(worst, std::abs(rp.eval(rho)));
            char worst_str[32];
            std::snprintf(worst_str, sizeof worst_str, "%.2e", worst);
            report.add("windmill-" + std::to_string(m) + "-" + std::to_string(n),
                       degree_ok && worst <= tol,
                       "degree " + std::to_string(rp.degree()) + ", max |RP(rho)| = " +
                           worst_str);
        }
    }
    return report;
}

CheckReport verify_all(double tables_tol) {
    CheckReport report;
    report.merge(verify_tables(tables_tol));
    report.merge(verify_closed_forms(8, 1e-8));
    report.merge(verify_census());
    report.merge(verify_classes(1e-6));
    report.merge(verify_windmill(1e-8));
    return report;
}

}  // namespace randic
