#include "randic/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>

#include "json.hpp"
#include "randic/detail/paper_tables_data.hpp"
#include "randic/errors.hpp"
#include "randic/spectral.hpp"

namespace randic {

// ----------------------------------------------------------- reference tables

namespace {

PaperTables g_tables;
bool g_tables_loaded = false;
std::mutex g_tables_mutex;

Graph graph_from_adjacency(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("adjacency matrix not square");
        if (rows[i][i] != 0) throw std::invalid_argument("adjacency matrix has nonzero diagonal");
        for (int j = i + 1; j < n; ++j) {
            if (rows[i][j] != rows[j][i])
                throw std::invalid_argument("adjacency matrix not symmetric");
            if (rows[i][j]) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace

PaperTables parse_paper_tables(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    PaperTables t;
    t.names = j.at("names").get<std::vector<std::string>>();
    for (const auto& name : t.names) {
        std::vector<BigInt> coeffs;
        for (const auto& s : j.at("table1").at(name))
            coeffs.emplace_back(s.get<std::string>());
        t.table1.emplace(name, IntPolynomial(std::move(coeffs)));
        const auto& row = j.at("table2").at(name);
        t.table2.emplace(name, std::make_pair(std::stod(row.at("energy").get<std::string>()),
                                              std::stod(row.at("randic_energy").get<std::string>())));
    }
    for (const auto& [name, value] : j.at("permanents").items())
        t.permanents.emplace(name, BigInt(value.get<std::string>()));
    t.printed_g1 = graph_from_adjacency(j.at("adjacency_g1").get<std::vector<std::vector<int>>>());
    return t;
}

const PaperTables& paper_tables() {
    std::lock_guard lock(g_tables_mutex);
    if (!g_tables_loaded) {
        g_tables = parse_paper_tables(detail::paper_tables_json());
        g_tables_loaded = true;
    }
    return g_tables;
}

void set_paper_tables(PaperTables tables) {
    std::lock_guard lock(g_tables_mutex);
    g_tables = std::move(tables);
    g_tables_loaded = true;
}

// ------------------------------------------------------------------ census

namespace {

// Charpoly over int64 for census deduplication. For 0/1 symmetric matrices of
// degree <= 3 and n <= 10 the Faddeev-LeVerrier intermediates stay below
// ~2^32, far inside int64 range; divisions by k are exact.
using CoeffKey = std::array<long long, 11>;

CoeffKey charpoly_i64(const std::vector<std::vector<int>>& adj, int n) {
    std::vector<long long> m(static_cast<size_t>(n) * n, 0), next(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j : adj[i]) m[static_cast<size_t>(i) * n + j] = 1;
    CoeffKey c{};
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        long long trace = 0;
        for (int i = 0; i < n; ++i) trace += m[static_cast<size_t>(i) * n + i];
        if (trace % k != 0) throw std::logic_error("charpoly_i64: inexact division");
        c[n - k] = -(trace / k);
        if (k == n) break;
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] += c[n - k];
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                long long s = 0;
                for (int l : adj[i]) s += m[static_cast<size_t>(l) * n + j];
                next[static_cast<size_t>(i) * n + j] = s;
            }
        }
        m.swap(next);
    }
    return c;
}

struct CensusState {
    int n;
    std::vector<int> rem;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges;
    std::map<CoeffKey, std::vector<std::pair<int, int>>> classes;

    void leaf() {
        CoeffKey key = charpoly_i64(adj, n);
        classes.try_emplace(key, edges);
    }

    // Connect the smallest unfinished vertex to every rem[v]-subset of the
    // still-available later vertices, in increasing order.
    void extend() {
        int v = -1;
        for (int i = 0; i < n; ++i) {
            if (rem[i] > 0) {
                v = i;
                break;
            }
        }
        if (v < 0) {
            leaf();
            return;
        }
        std::vector<int> avail;
        for (int w = v + 1; w < n; ++w)
            if (rem[w] > 0) avail.push_back(w);
        std::vector<int> combo;
        choose(v, avail, 0, combo);
    }

    void choose(int v, const std::vector<int>& avail, size_t start, std::vector<int>& combo) {
        int need = rem[v] - static_cast<int>(combo.size());
        if (need == 0) {
            apply(v, combo);
            return;
        }
        if (static_cast<int>(avail.size() - start) < need) return;
        for (size_t i = start; i < avail.size(); ++i) {
            combo.push_back(avail[i]);
            choose(v, avail, i + 1, combo);
            combo.pop_back();
        }
    }

    void apply(int v, const std::vector<int>& combo) {
        for (int w : combo) {
            --rem[w];
            adj[v].push_back(w);
            adj[w].push_back(v);
            edges.emplace_back(v, w);
        }
        int saved = rem[v];
        rem[v] = 0;
        extend();
        rem[v] = saved;
        for (int w : combo) {
            ++rem[w];
            adj[v].pop_back();
            adj[w].pop_back();
            edges.pop_back();
        }
    }
};

}  // namespace

std::vector<Graph> enumerate_cubic(int n) {
    if (n < 4 || n > 10 || n % 2 != 0)
        throw std::invalid_argument("enumerate_cubic: n must be even, 4 <= n <= 10");

    CensusState st;
    st.n = n;
    st.rem.assign(n, 3);
    st.adj.assign(n, {});

    // Every cubic graph has a labeling with N(0) = {1,2,3}; restricting the
    // root choice to that set cuts the labeled search space by a factor of
    // C(n-1,3) without losing any class.
    std::vector<int> first{1, 2, 3};
    st.apply(0, first);

    std::vector<Graph> out;
    out.reserve(st.classes.size());
    for (const auto& [key, edges] : st.classes) out.emplace_back(n, edges);
    return out;  // std::map iteration = ascending coefficient order
}

// ------------------------------------------------------------------ catalog

std::vector<CatalogEntry> build_catalog() {
    const PaperTables& tables = paper_tables();
    std::vector<Graph> reps = enumerate_cubic(10);
    if (reps.size() != tables.names.size())
        throw CatalogMismatchError("build_catalog: census found " + std::to_string(reps.size()) +
                                   " classes, reference table has " +
                                   std::to_string(tables.names.size()));

    std::vector<CatalogEntry> entries;
    std::vector<bool> used(reps.size(), false);
    for (const auto& name : tables.names) {
        const IntPolynomial& want = tables.table1.at(name);
        int found = -1;
        for (size_t i = 0; i < reps.size(); ++i) {
            if (!used[i] && charpoly_adjacency(reps[i]) == want) {
                found = static_cast<int>(i);
                break;
            }
        }
        if (found < 0)
            throw CatalogMismatchError("build_catalog: no census class matches " + name);
        used[found] = true;

        CatalogEntry e;
        e.name = name;
        e.index = std::stoi(name.substr(name.find('_') + 1));
        e.graph = reps[found];
        e.graph6 = graph6_encode(e.graph);
        e.charpoly = want;
        e.energy = energy(e.graph);
        e.randic_energy = randic_energy(e.graph);
        e.permanent = permanent_of_graph(e.graph);
        e.connected = e.graph.is_connected();
        entries.push_back(std::move(e));
    }
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            throw CatalogMismatchError("build_catalog: census class " + std::to_string(i) +
                                       " matches no reference polynomial");
    return entries;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cached = build_catalog();
    return cached;
}

EquivalenceClasses equivalence_classes(const std::vector<CatalogEntry>& entries, EnergyKey key,
                                       double tol) {
    if (tol <= 0.0) throw std::invalid_argument("equivalence_classes: tol must be > 0");
    auto value = [&](const CatalogEntry& e) {
        return key == EnergyKey::energy ? e.energy : e.randic_energy;
    };
    std::vector<int> order(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return value(entries[a]) < value(entries[b]); });

    // Single linkage: a gap > tol between consecutive sorted values splits.
    std::vector<std::vector<int>> groups;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || value(entries[order[i]]) - value(entries[order[i - 1]]) > tol)
            groups.emplace_back();
        groups.back().push_back(order[i]);
    }

    EquivalenceClasses out;
    out.tol = tol;
    for (auto& g : groups)
        std::sort(g.begin(), g.end(),
                  [&](int a, int b) { return entries[a].index < entries[b].index; });
    std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
        return entries[a.front()].index < entries[b.front()].index;
    });
    for (const auto& g : groups) {
        std::vector<std::string> names;
        for (int i : g) names.push_back(entries[i].name);
        out.classes.push_back(std::move(names));
    }
    return out;
}

CheckReport verify_tables(double tol) {
    const PaperTables& tables = paper_tables();
    const auto& entries = catalog();
    CheckReport report;

    int poly_bad = 0;
    for (const auto& e : entries)
        if (!(charpoly_adjacency(e.graph) == tables.table1.at(e.name))) ++poly_bad;
    report.add("table1-exact-polynomials", poly_bad == 0,
               poly_bad == 0 ? "21/21 exact matches"
                             : std::to_string(poly_bad) + " mismatches");

    int energy_bad = 0;
    std::string detail;
    for (const auto& e : entries) {
        auto [pe, pre] = tables.table2.at(e.name);
        if (std::abs(e.energy - pe) > tol || std::abs(e.randic_energy - pre) > tol) {
            ++energy_bad;
            if (detail.size() < 200) detail += e.name + " ";
        }
    }
    report.add("table2-printed-energies", energy_bad == 0,
               energy_bad == 0 ? "42/42 values within " + std::to_string(tol)
                               : "mismatched: " + detail);

    int perm_bad = 0;
    for (const auto& [name, want] : tables.permanents) {
        auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const CatalogEntry& e) { return e.name == name; });
        if (it == entries.end() || it->permanent != want) ++perm_bad;
    }
    report.add("known-permanents", perm_bad == 0,
               perm_bad == 0 ? "6/6 exact" : std::to_string(perm_bad) + " mismatches");

    bool g1_poly = charpoly_adjacency(tables.printed_g1) == tables.table1.at("G_1");
    bool g1_perm = permanent_of_graph(tables.printed_g1) == tables.permanents.at("G_1");
    report.add("explicit-g1-matrix", g1_poly && g1_perm,
               std::string("charpoly ") + (g1_poly ? "ok" : "BAD") + ", permanent " +
                   (g1_perm ? "ok" : "BAD"));
    return report;
}

}  // namespace randic
