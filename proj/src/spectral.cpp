#include "randic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "randic/errors.hpp"

namespace randic {

SymMatrix randic_matrix(const Graph& g) {
    SymMatrix r(g.vertex_count());
    const auto& deg = g.degrees();
    for (auto [i, j] : g.edges())
        r.set(i, j, 1.0 / std::sqrt(static_cast<double>(deg[i]) * deg[j]));
    return r;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.vertex_count());
    for (auto [i, j] : g.edges()) a.set(i, j, 1.0);
    return a;
}

namespace {

double frobenius(const SymMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues_symmetric(const SymMatrix& mat, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("eigenvalues_symmetric: tol must be > 0");
    const int n = mat.size();
    if (n == 0) return Spectrum{};

    // Work on copies: a is rotated in place, v accumulates the eigenvectors.
    std::vector<double> a(static_cast<size_t>(n) * n), v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = mat(i, j);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    const double norm = frobenius(mat);
    const double off_target = 1e-13 * norm;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * A(i, j) * A(i, j);
        if (std::sqrt(off) <= off_target) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = A(p, q);
                if (apq == 0.0) continue;
                double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = A(p, p), aqq = A(q, q);
                A(p, p) = app - t * apq;
                A(q, q) = aqq + t * apq;
                A(p, q) = A(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = A(i, p), aiq = A(i, q);
                    A(i, p) = A(p, i) = aip - s * (aiq + tau * aip);
                    A(i, q) = A(q, i) = aiq + s * (aip - tau * aiq);
                }
                for (int i = 0; i < n; ++i) {
                    double vip = V(i, p), viq = V(i, q);
                    V(i, p) = vip - s * (viq + tau * vip);
                    V(i, q) = viq + s * (vip - tau * viq);
                }
            }
        }
    }

    Spectrum spec;
    spec.values.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return A(x, x) > A(y, y); });
    for (int i = 0; i < n; ++i) spec.values[i] = A(order[i], order[i]);

    // Residual against the original matrix: max_i ||M v_i - lambda_i v_i||_2.
    double worst = 0.0;
    for (int col = 0; col < n; ++col) {
        double sq = 0.0;
        double lambda = A(col, col);
        for (int i = 0; i < n; ++i) {
            double mv = 0.0;
            for (int j = 0; j < n; ++j) mv += mat(i, j) * V(j, col);
            double d = mv - lambda * V(i, col);
            sq += d * d;
        }
        worst = std::max(worst, std::sqrt(sq));
    }
    spec.residual = worst;
    if (worst > tol)
        throw ConvergenceError("eigenvalues_symmetric: residual " + std::to_string(worst) +
                                   " exceeds tolerance",
                               worst);
    return spec;
}

namespace {

double abs_sum(const std::vector<double>& values) {
    double s = 0.0;
    for (double x : values) s += std::abs(x);
    return s;
}

}  // namespace

double energy(const Graph& g) {
    return abs_sum(eigenvalues_symmetric(adjacency_matrix(g)).values);
}

double randic_energy(const Graph& g) {
    return abs_sum(eigenvalues_symmetric(randic_matrix(g)).values);
}

std::string to_string(EnergyMethod m) {
    return m == EnergyMethod::numeric ? "numeric" : "regular-shortcut";
}

EnergyReport make_energy_report(const Graph& g, std::string id) {
    EnergyReport r;
    r.id = std::move(id);
    r.n = g.vertex_count();
    r.edges = g.edge_count();
    Spectrum adj = eigenvalues_symmetric(adjacency_matrix(g));
    r.spectrum = adj.values;
    r.energy = abs_sum(adj.values);
    auto k = g.regularity();
    if (k && *k >= 1) {
        r.randic_energy = r.energy / *k;
        r.method = EnergyMethod::regular_shortcut;
    } else {
        r.randic_energy = randic_energy(g);
        r.method = EnergyMethod::numeric;
    }
    return r;
}

namespace {

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// graph6 ids may contain '\' and other JSON-special bytes.
std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string EnergyReport::to_json() const {
    std::string s = "{\"id\":\"" + json_escape(id) + "\",\"n\":" + std::to_string(n) +
                    ",\"edges\":" + std::to_string(edges) + ",\"energy\":" + fmt12(energy) +
                    ",\"randic_energy\":" + fmt12(randic_energy) + ",\"method\":\"" +
                    to_string(method) + "\",\"spectrum\":[";
    for (size_t i = 0; i < spectrum.size(); ++i) {
        if (i) s += ",";
        s += fmt12(spectrum[i]);
    }
    return s + "]}";
}

int spectra_difference(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.values.size() != b.values.size())
        throw std::invalid_argument("spectra_difference: length mismatch");
    // Both lists are sorted non-increasing; greedy two-pointer matching is
    // optimal for interval matching on sorted sequences.
    size_t i = 0, j = 0, unmatched_a = 0;
    while (i < a.values.size() && j < b.values.size()) {
        double x = a.values[i], y = b.values[j];
        if (std::abs(x - y) <= tol) {
            ++i;
            ++j;
        } else if (x > y) {
            ++unmatched_a;
            ++i;
        } else {
            ++j;
        }
    }
    unmatched_a += a.values.size() - i;
    return static_cast<int>(unmatched_a);
}

}  // namespace randic
