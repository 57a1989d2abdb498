// Command-line surface: charpoly, randic-charpoly, energy, perm, census,
// classes, families, verify. Exit codes: 0 success, 1 verification or
// computation failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "randic/catalog.hpp"
#include "randic/errors.hpp"
#include "randic/families.hpp"
#include "randic/graph.hpp"
#include "randic/permanent.hpp"
#include "randic/polynomial.hpp"
#include "randic/spectral.hpp"
#include "randic/verify.hpp"

using namespace randic;

namespace {

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

std::pair<int, int> parse_int_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected two comma-separated integers in '" + s + "'");
    return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

// Graph input forms: cycle:5 | windmill:5,3 | kmn-e:3,4 | petersen |
// catalog:G_12 | g6:<string> | file:<path>
Graph parse_graph_spec(const std::string& spec) {
    if (spec == "petersen") return make_petersen();
    auto colon = spec.find(':');
    std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "cycle") return make_cycle(parse_int(rest));
    if (kind == "windmill") {
        auto [m, n] = parse_int_pair(rest);
        return make_dutch_windmill(m, n);
    }
    if (kind == "kmn-e") {
        auto [m, n] = parse_int_pair(rest);
        return make_complete_bipartite_minus_edge(m, n);
    }
    if (kind == "catalog") {
        for (const auto& e : catalog())
            if (e.name == rest) return e.graph;
        throw std::invalid_argument("no catalog entry named '" + rest + "'");
    }
    if (kind == "g6") return graph6_decode(rest);
    if (kind == "file") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open '" + rest + "'");
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return graph6_decode(line);
        throw std::invalid_argument("no graph6 line in '" + rest + "'");
    }
    throw std::invalid_argument(
        "unknown graph spec '" + spec +
        "' (forms: cycle:5, windmill:5,3, kmn-e:3,4, petersen, catalog:G_12, g6:..., file:...)");
}

nlohmann::json coeff_json(const std::vector<std::string>& coeffs) {
    return nlohmann::json(coeffs);
}

int print_report(const CheckReport& report) {
    for (const auto& line : report.lines)
        std::printf("%s %s - %s\n", line.pass ? "PASS" : "FAIL", line.name.c_str(),
                    line.detail.c_str());
    int failed = 0;
    for (const auto& line : report.lines)
        if (!line.pass) ++failed;
    std::printf("%d/%zu checks passed\n", static_cast<int>(report.lines.size()) - failed,
                report.lines.size());
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph energy and Randic energy toolkit"};
    app.require_subcommand(1);
    std::string tables_path;
    app.add_option("--tables", tables_path, "override the built-in reference tables (JSON)");

    std::string graph_spec;
    bool as_json = false;

    auto* cmd_charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
    cmd_charpoly->add_option("--graph", graph_spec, "graph spec")->required();
    cmd_charpoly->add_flag("--json", as_json);

    auto* cmd_rcharpoly =
        app.add_subcommand("randic-charpoly", "exact Randic characteristic polynomial");
    cmd_rcharpoly->add_option("--graph", graph_spec, "graph spec")->required();
    cmd_rcharpoly->add_flag("--json", as_json);

    auto* cmd_energy = app.add_subcommand("energy", "energy and Randic energy");
    cmd_energy->add_option("--graph", graph_spec, "graph spec")->required();
    cmd_energy->add_flag("--json", as_json);

    std::string perm_catalog;
    auto* cmd_perm = app.add_subcommand("perm", "exact adjacency permanent");
    cmd_perm->add_option("--graph", graph_spec, "graph spec");
    cmd_perm->add_option("--catalog", perm_catalog, "catalog entry name (e.g. G_7)");

    int census_n = 10;
    std::string g6_out;
    auto* cmd_census = app.add_subcommand("census", "enumerate cubic graphs");
    cmd_census->add_option("--n", census_n, "order (even, 4..10)")->required();
    cmd_census->add_option("--g6-out", g6_out, "write one graph6 line per class");
    cmd_census->add_flag("--json", as_json);

    std::string class_key = "energy";
    double class_tol = 1e-6;
    auto* cmd_classes = app.add_subcommand("classes", "energy equivalence classes");
    cmd_classes->add_option("--key", class_key, "energy | randic")
        ->check(CLI::IsMember({"energy", "randic"}));
    cmd_classes->add_option("--tol", class_tol, "grouping tolerance");
    cmd_classes->add_flag("--json", as_json);

    std::vector<double> probe_range;
    int max_witnesses = 1000;
    auto* cmd_families = app.add_subcommand("families", "closed-form families and density probe");
    cmd_families->add_option("--probe", probe_range, "RE interval [lo hi]")
        ->expected(2)
        ->required();
    cmd_families->add_option("--max-witnesses", max_witnesses, "output cap");
    cmd_families->add_flag("--json", as_json);

    bool v_tables = false, v_closed = false, v_census = false, v_classes = false,
         v_windmill = false, v_all = false;
    double verify_tol = 2e-4;
    auto* cmd_verify = app.add_subcommand("verify", "verification harness");
    cmd_verify->add_flag("--tables", v_tables, "reference tables");
    cmd_verify->add_flag("--closed-forms", v_closed, "closed-form energies");
    cmd_verify->add_flag("--census", v_census, "census counts");
    cmd_verify->add_flag("--classes", v_classes, "equivalence classes");
    cmd_verify->add_flag("--windmill", v_windmill, "windmill factorization");
    cmd_verify->add_flag("--all", v_all, "everything");
    cmd_verify->add_option("--tol", verify_tol, "tolerance for the printed-table comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!tables_path.empty()) {
            std::ifstream in(tables_path);
            if (!in) throw std::invalid_argument("cannot open '" + tables_path + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            set_paper_tables(parse_paper_tables(buffer.str()));
        }

        if (*cmd_charpoly) {
            IntPolynomial p = charpoly_adjacency(parse_graph_spec(graph_spec));
            if (as_json) {
                nlohmann::json j{{"id", graph_spec}, {"coeffs", coeff_json(p.coeff_strings())}};
                std::printf("%s\n", j.dump().c_str());
            } else {
                std::printf("P(%s) = %s\n", graph_spec.c_str(), p.str().c_str());
            }
            return 0;
        }

        if (*cmd_rcharpoly) {
            Graph g = parse_graph_spec(graph_spec);
            RatPolynomial rp;
            if (graph_spec.rfind("windmill:", 0) == 0) {
                auto [m, n] = parse_int_pair(graph_spec.substr(9));
                rp = randic_charpoly_windmill(m, n);
            } else if (graph_spec.rfind("cycle:", 0) == 0) {
                rp = randic_charpoly_cycle(parse_int(graph_spec.substr(6)));
            } else if (auto k = g.regularity(); k && *k >= 1) {
                rp = randic_charpoly_regular(g, *k);
            } else {
                throw std::invalid_argument(
                    "exact Randic charpoly needs a cycle, windmill, or regular graph");
            }
            if (as_json) {
                nlohmann::json j{{"id", graph_spec}, {"coeffs", coeff_json(rp.coeff_strings())}};
                std::printf("%s\n", j.dump().c_str());
            } else {
                std::printf("RP(%s) = %s\n", graph_spec.c_str(), rp.str().c_str());
            }
            return 0;
        }

        if (*cmd_energy) {
            EnergyReport r = make_energy_report(parse_graph_spec(graph_spec), graph_spec);
            if (as_json) {
                std::printf("%s\n", r.to_json().c_str());
            } else {
                std::printf("E(%s) = %.12f\nRE(%s) = %.12f\nmethod = %s\n", graph_spec.c_str(),
                            r.energy, graph_spec.c_str(), r.randic_energy,
                            to_string(r.method).c_str());
            }
            return 0;
        }

        if (*cmd_perm) {
            if (graph_spec.empty() == perm_catalog.empty())
                throw std::invalid_argument("perm: give exactly one of --graph or --catalog");
            Graph g = perm_catalog.empty() ? parse_graph_spec(graph_spec)
                                           : parse_graph_spec("catalog:" + perm_catalog);
            std::printf("%s\n", permanent_of_graph(g).get_str().c_str());
            return 0;
        }

        if (*cmd_census) {
            if (census_n == 10) {
                const auto& entries = catalog();
                int connected = 0;
                for (const auto& e : entries) connected += e.connected ? 1 : 0;
                if (as_json) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& e : entries)
                        arr.push_back({{"name", e.name},
                                       {"graph6", e.graph6},
                                       {"energy", e.energy},
                                       {"randic_energy", e.randic_energy},
                                       {"permanent", e.permanent.get_str()},
                                       {"connected", e.connected}});
                    std::printf("%s\n", arr.dump().c_str());
                } else {
                    std::printf("n=10: %zu classes (%d connected, %zu disconnected)\n",
                                entries.size(), connected, entries.size() - connected);
                    for (const auto& e : entries)
                        std::printf("%-5s %s\n", e.name.c_str(), e.graph6.c_str());
                }
                if (!g6_out.empty()) {
                    std::ofstream out(g6_out);
                    for (const auto& e : entries) out << e.graph6 << "\n";
                }
            } else {
                auto reps = enumerate_cubic(census_n);
                int connected = 0;
                for (const auto& g : reps) connected += g.is_connected() ? 1 : 0;
                if (as_json) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& g : reps)
                        arr.push_back({{"graph6", graph6_encode(g)},
                                       {"connected", g.is_connected()}});
                    std::printf("%s\n", arr.dump().c_str());
                } else {
                    std::printf("n=%d: %zu classes (%d connected, %zu disconnected)\n", census_n,
                                reps.size(), connected, reps.size() - connected);
                    for (const auto& g : reps) std::printf("%s\n", graph6_encode(g).c_str());
                }
                if (!g6_out.empty()) {
                    std::ofstream out(g6_out);
                    for (const auto& g : reps) out << graph6_encode(g) << "\n";
                }
            }
            return 0;
        }

        if (*cmd_classes) {
            EnergyKey key = class_key == "energy" ? EnergyKey::energy : EnergyKey::randic;
            EquivalenceClasses cls = equivalence_classes(catalog(), key, class_tol);
            if (as_json) {
                nlohmann::json j{{"key", class_key}, {"tol", cls.tol}, {"classes", cls.classes}};
                std::printf("%s\n", j.dump().c_str());
            } else {
                std::printf("%s classes (tol %g):\n", class_key.c_str(), cls.tol);
                for (const auto& c : cls.classes) {
                    std::string line;
                    for (const auto& name : c) {
                        if (!line.empty()) line += ", ";
                        line += name;
                    }
                    std::printf("{%s}\n", line.c_str());
                }
            }
            return 0;
        }

        if (*cmd_families) {
            auto witnesses = density_probe(probe_range[0], probe_range[1], max_witnesses);
            if (as_json) {
                std::printf("%s\n", witnesses_to_json(witnesses).c_str());
            } else {
                std::printf("%zu witnesses with RE in [%g, %g]:\n", witnesses.size(),
                            probe_range[0], probe_range[1]);
                for (const auto& w : witnesses)
                    std::printf("%-40s RE = %s = %.10f\n", w.spec.str().c_str(),
                                w.re.str().c_str(), w.re.value());
            }
            return 0;
        }

        if (*cmd_verify) {
            CheckReport report;
            bool any = v_tables || v_closed || v_census || v_classes || v_windmill;
            if (v_all || !any) {
                report = verify_all(verify_tol);
            } else {
                if (v_tables) report.merge(verify_tables(verify_tol));
                if (v_closed) report.merge(verify_closed_forms(8, 1e-8));
                if (v_census) report.merge(verify_census());
                if (v_classes) report.merge(verify_classes(1e-6));
                if (v_windmill) report.merge(verify_windmill(1e-8));
            }
            return print_report(report);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
