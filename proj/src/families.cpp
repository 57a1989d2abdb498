#include "randic/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "randic/spectral.hpp"

namespace randic {

std::string to_string(Family f) {
    switch (f) {
        case Family::friendship: return "friendship";
        case Family::windmill4: return "windmill4";
        case Family::windmill5: return "windmill5";
        case Family::complete_bipartite_minus_edge: return "complete-bipartite-minus-edge";
    }
    throw std::invalid_argument("unknown family");
}

std::string FamilySpec::str() const {
    if (family == Family::complete_bipartite_minus_edge)
        return to_string(family) + "(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
    return to_string(family) + "(n=" + std::to_string(n) + ")";
}

Graph family_graph(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::friendship: return make_friendship(spec.n);
        case Family::windmill4: return make_dutch_windmill(4, spec.n);
        case Family::windmill5: return make_dutch_windmill(5, spec.n);
        case Family::complete_bipartite_minus_edge:
            return make_complete_bipartite_minus_edge(spec.m, spec.n);
    }
    throw std::invalid_argument("unknown family");
}

double ExactRE::value() const { return a.get_d() + b.get_d() * std::sqrt(radicand); }

std::string ExactRE::str() const {
    if (b == 0) return a.get_str();
    if (radicand == 1) {
        BigRat merged = a + b;
        return merged.get_str();
    }
    std::string bs = b.get_str();
    std::string root = "sqrt(" + std::to_string(radicand) + ")";
    std::string term = bs == "1" ? root
                                 : (bs.find('/') != std::string::npos ? "(" + bs + ")*" + root
                                                                      : bs + "*" + root);
    if (a == 0) return term;
    return a.get_str() + " + " + term;
}

namespace {

// mn = s^2 * r with r square-free.
void square_free_split(long mn, long& s, long& r) {
    s = 1;
    r = mn;
    for (long d = 2; d * d <= r; ++d) {
        while (r % (d * d) == 0) {
            r /= d * d;
            s *= d;
        }
    }
}

}  // namespace

ExactRE closed_form_re(const FamilySpec& spec) {
    ExactRE out;
    switch (spec.family) {
        case Family::friendship:
            if (spec.n < 1) throw std::invalid_argument("friendship: n must be >= 1");
            out.a = spec.n + 1;
            out.b = 0;
            out.radicand = 1;
            return out;
        case Family::windmill4:
            if (spec.n < 1) throw std::invalid_argument("windmill4: n must be >= 1");
            out.a = 2;
            out.b = spec.n - 1;
            out.radicand = spec.n == 1 ? 1 : 2;
            return out;
        case Family::windmill5:
            if (spec.n < 1) throw std::invalid_argument("windmill5: n must be >= 1");
            out.a = 1;
            out.b = spec.n;
            out.radicand = 5;
            return out;
        case Family::complete_bipartite_minus_edge: {
            if (spec.m < 2 || spec.n < 2)
                throw std::invalid_argument("complete-bipartite-minus-edge: m, n must be >= 2");
            long s = 1, r = 1;
            square_free_split(static_cast<long>(spec.m) * spec.n, s, r);
            out.a = 2;
            out.b = BigRat(2, s * r);
            out.b.canonicalize();
            out.radicand = r;
            return out;
        }
    }
    throw std::invalid_argument("unknown family");
}

CheckReport verify_closed_forms(int max_n, double tol) {
    if (max_n < 1) throw std::invalid_argument("verify_closed_forms: max_n must be >= 1");
    CheckReport report;

    auto family_line = [&](Family f, const std::string& label) {
        double worst = 0.0;
        int count = 0;
        if (f == Family::complete_bipartite_minus_edge) {
            for (int m = 2; m <= max_n; ++m) {
                for (int n = 2; n <= max_n; ++n) {
                    FamilySpec spec{f, m, n};
                    worst = std::max(worst, std::abs(randic_energy(family_graph(spec)) -
                                                     closed_form_re(spec).value()));
                    ++count;
                }
            }
        } else {
            for (int n = 1; n <= max_n; ++n) {
                FamilySpec spec{f, 0, n};
                worst = std::max(worst, std::abs(randic_energy(family_graph(spec)) -
                                                 closed_form_re(spec).value()));
                ++count;
            }
        }
        char worst_str[32];
        std::snprintf(worst_str, sizeof worst_str, "%.2e", worst);
        report.add(label, worst <= tol,
                   std::to_string(count) + " members, max |numeric - closed| = " + worst_str);
    };

    family_line(Family::friendship, "closed-form-friendship");
    family_line(Family::windmill4, "closed-form-windmill4");
    family_line(Family::windmill5, "closed-form-windmill5");
    family_line(Family::complete_bipartite_minus_edge, "closed-form-kmn-minus-edge");

    double c4 = randic_energy(make_cycle(4));
    double d41 = randic_energy(make_dutch_windmill(4, 1));
    report.add("boundary-windmill4-is-c4",
               std::abs(c4 - 2.0) <= tol && std::abs(d41 - c4) <= tol,
               "RE(C_4) = " + std::to_string(c4));
    double c5 = randic_energy(make_cycle(5));
    double d51 = randic_energy(make_dutch_windmill(5, 1));
    double want = 1.0 + std::sqrt(5.0);
    report.add("boundary-windmill5-is-c5",
               std::abs(c5 - want) <= tol && std::abs(d51 - c5) <= tol,
               "RE(C_5) = " + std::to_string(c5));
    return report;
}

std::vector<Witness> density_probe(double lo, double hi, int max_witnesses) {
    if (lo < 2.0)
        throw std::invalid_argument("density_probe: lo < 2 (graphs with an edge have RE >= 2)");
    if (!(lo < hi)) throw std::invalid_argument("density_probe: need lo < hi");
    if (max_witnesses < 1) throw std::invalid_argument("density_probe: max_witnesses must be >= 1");

    constexpr long kParamCap = 10000;
    std::vector<Witness> out;

    auto try_add = [&](FamilySpec spec) {
        ExactRE re = closed_form_re(spec);
        double v = re.value();
        if (v >= lo && v <= hi) out.push_back({spec, re});
        return v;
    };

    // friendship: RE = n + 1, increasing in n.
    for (long n = std::max(1L, static_cast<long>(std::ceil(lo - 1.0))); n <= kParamCap; ++n) {
        if (n + 1.0 > hi) break;
        try_add({Family::friendship, 0, static_cast<int>(n)});
    }
    // windmill4: RE = 2 + (n-1) sqrt(2), increasing in n.
    {
        long start = std::max(1L, static_cast<long>(std::floor((lo - 2.0) / std::sqrt(2.0))) + 1);
        for (long n = start; n <= kParamCap; ++n) {
            double v = 2.0 + (n - 1) * std::sqrt(2.0);
            if (v > hi) break;
            if (v >= lo) try_add({Family::windmill4, 0, static_cast<int>(n)});
        }
    }
    // windmill5: RE = 1 + n sqrt(5), increasing in n.
    {
        long start = std::max(1L, static_cast<long>(std::floor((lo - 1.0) / std::sqrt(5.0))));
        for (long n = start; n <= kParamCap; ++n) {
            double v = 1.0 + n * std::sqrt(5.0);
            if (v > hi) break;
            if (v >= lo) try_add({Family::windmill5, 0, static_cast<int>(n)});
        }
    }
    // K_{m,n} - e: RE = 2 + 2/sqrt(mn), decreasing in the product mn. Walk the
    // product upward from the hi end and keep any t = m*n factorable with
    // 2 <= m <= n <= cap. Bounded by max_witnesses: for lo near 2 the full
    // range would be ~10^8 products.
    {
        long t_lo = 4;
        if (hi < 3.0) {
            double b = 2.0 / (hi - 2.0);
            t_lo = std::max(4L, static_cast<long>(std::ceil(b * b - 1e-9)));
        }
        long t_hi = kParamCap * kParamCap;
        if (lo > 2.0) {
            double b = 2.0 / (lo - 2.0);
            t_hi = std::min(t_hi, static_cast<long>(std::floor(b * b + 1e-9)));
        }
        int found = 0;
        for (long t = t_lo; t <= t_hi && found < max_witnesses; ++t) {
            long m_min = (t + kParamCap - 1) / kParamCap;  // need n = t/m <= cap
            bool hit = false;
            for (long m = std::max(2L, m_min); m * m <= t; ++m) {
                if (t % m == 0) {
                    double v = 2.0 + 2.0 / std::sqrt(static_cast<double>(t));
                    if (v >= lo && v <= hi) {
                        try_add({Family::complete_bipartite_minus_edge, static_cast<int>(m),
                                 static_cast<int>(t / m)});
                        hit = true;
                    }
                    break;
                }
            }
            if (hit) ++found;
        }
    }

    std::sort(out.begin(), out.end(), [](const Witness& a, const Witness& b) {
        double va = a.re.value(), vb = b.re.value();
        if (va != vb) return va < vb;
        return a.spec.str() < b.spec.str();
    });
    if (static_cast<int>(out.size()) > max_witnesses) out.resize(max_witnesses);
    return out;
}

std::string witnesses_to_json(const std::vector<Witness>& ws) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : ws) {
        nlohmann::json params;
        if (w.spec.family == Family::complete_bipartite_minus_edge) params["m"] = w.spec.m;
        params["n"] = w.spec.n;
        arr.push_back({{"family", to_string(w.spec.family)},
                       {"params", params},
                       {"re_exact", w.re.str()},
                       {"re_float", w.re.value()}});
    }
    return arr.dump();
}

}  // namespace randic
