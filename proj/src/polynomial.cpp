#include "randic/polynomial.hpp"

#include <stdexcept>

#include "randic/errors.hpp"

namespace randic {

namespace {

template <class Coeff>
void strip_leading_zeros(std::vector<Coeff>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Shared text rendering, descending powers: "x^4 - (3/4)x^2 + 1/16".
template <class Coeff>
std::string render(const std::vector<Coeff>& coeffs, bool parenthesize_fractions) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const Coeff& c = coeffs[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Coeff magnitude = abs(c);
        std::string mag = magnitude.get_str();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool fraction = mag.find('/') != std::string::npos;
        if (k == 0) {
            out += mag;
        } else {
            if (mag != "1") {
                if (fraction && parenthesize_fractions)
                    out += "(" + mag + ")";
                else
                    out += mag;
            }
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

template <class Coeff>
std::vector<Coeff> convolve(const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Coeff> out(a.size() + b.size() - 1, Coeff(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    strip_leading_zeros(out);
    return out;
}

template <class Coeff>
void add_into(std::vector<Coeff>& a, const std::vector<Coeff>& b, int sign) {
    if (a.size() < b.size()) a.resize(b.size(), Coeff(0));
    for (size_t i = 0; i < b.size(); ++i) {
        if (sign > 0)
            a[i] += b[i];
        else
            a[i] -= b[i];
    }
    strip_leading_zeros(a);
}

}  // namespace

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    normalize();
}

void IntPolynomial::normalize() { strip_leading_zeros(coeffs_); }

IntPolynomial IntPolynomial::one() { return IntPolynomial({BigInt(1)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<BigInt> v(degree + 1, BigInt(0));
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
}

const BigInt& IntPolynomial::coeff(int k) const {
    static const BigInt zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat IntPolynomial::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

double IntPolynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    add_into(coeffs_, rhs.coeffs_, +1);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    add_into(coeffs_, rhs.coeffs_, -1);
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    out.coeffs_ = convolve(a.coeffs_, b.coeffs_);
    return out;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial base = *this, acc = IntPolynomial::one();
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::string IntPolynomial::str() const { return render(coeffs_, false); }

std::vector<std::string> IntPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

// ---------------------------------------------------------------- RatPolynomial

RatPolynomial::RatPolynomial(std::vector<BigRat> ascending) : coeffs_(std::move(ascending)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

void RatPolynomial::normalize() { strip_leading_zeros(coeffs_); }

RatPolynomial RatPolynomial::one() { return RatPolynomial({BigRat(1)}); }

RatPolynomial RatPolynomial::monomial(BigRat c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<BigRat> v(degree + 1, BigRat(0));
    v[degree] = std::move(c);
    return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::from_int(const IntPolynomial& p) {
    std::vector<BigRat> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return RatPolynomial(std::move(v));
}

const BigRat& RatPolynomial::coeff(int k) const {
    static const BigRat zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

BigRat RatPolynomial::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RatPolynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& rhs) {
    add_into(coeffs_, rhs.coeffs_, +1);
    return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& rhs) {
    add_into(coeffs_, rhs.coeffs_, -1);
    return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial out;
    out.coeffs_ = convolve(a.coeffs_, b.coeffs_);
    return out;
}

RatPolynomial RatPolynomial::pow(unsigned e) const {
    RatPolynomial base = *this, acc = RatPolynomial::one();
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::string RatPolynomial::str() const { return render(coeffs_, true); }

std::vector<std::string> RatPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

// ---------------------------------------------------------- charpoly_adjacency

IntPolynomial charpoly_adjacency(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return IntPolynomial::one();

    std::vector<BigInt> a(static_cast<size_t>(n) * n, BigInt(0));
    for (auto [i, j] : g.edges()) {
        a[static_cast<size_t>(i) * n + j] = 1;
        a[static_cast<size_t>(j) * n + i] = 1;
    }

    // Faddeev-LeVerrier: c_n = 1; M_1 = A; c_{n-k} = -tr(M_k)/k;
    // M_{k+1} = A (M_k + c_{n-k} I). Divisions by k are exact over Z.
    std::vector<BigInt> c(n + 1, BigInt(0));
    c[n] = 1;
    std::vector<BigInt> m = a;
    std::vector<BigInt> next(static_cast<size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        BigInt trace(0);
        for (int i = 0; i < n; ++i) trace += m[static_cast<size_t>(i) * n + i];
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), trace.get_mpz_t(), BigInt(k).get_mpz_t());
        if (r != 0)
            throw std::logic_error("charpoly_adjacency: inexact trace division");
        c[n - k] = -q;
        if (k == n) break;
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] += c[n - k];
        for (int i = 0; i < n; ++i) {
            const auto& nbrs = g.neighbors(i);
            for (int j = 0; j < n; ++j) {
                BigInt s(0);
                for (int l : nbrs) s += m[static_cast<size_t>(l) * n + j];
                next[static_cast<size_t>(i) * n + j] = s;
            }
        }
        m.swap(next);
    }

    if (c[n - 1] != 0)
        throw std::logic_error("charpoly_adjacency: trace coefficient nonzero");
    if (n >= 2 && c[n - 2] != -BigInt(g.edge_count()))
        throw std::logic_error("charpoly_adjacency: edge-count coefficient mismatch");
    return IntPolynomial(std::move(c));
}

// ------------------------------------------------------------ Randic charpolys

RatPolynomial lambda_recurrence(int k) {
    if (k < 1) throw std::invalid_argument("lambda_recurrence: k must be >= 1");
    RatPolynomial prev2 = RatPolynomial::monomial(BigRat(1), 1);            // L_1 = x
    if (k == 1) return prev2;
    RatPolynomial prev(std::vector<BigRat>{BigRat(-1, 4), BigRat(0), BigRat(1)});  // L_2
    const RatPolynomial x = RatPolynomial::monomial(BigRat(1), 1);
    const RatPolynomial quarter = RatPolynomial(std::vector<BigRat>{BigRat(1, 4)});
    for (int i = 3; i <= k; ++i) {
        RatPolynomial cur = x * prev - quarter * prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

RatPolynomial randic_charpoly_cycle(int m) {
    if (m < 3) throw std::invalid_argument("randic_charpoly_cycle: m must be >= 3");
    const RatPolynomial x = RatPolynomial::monomial(BigRat(1), 1);
    RatPolynomial lm1 = lambda_recurrence(m - 1);
    RatPolynomial lm2 = lambda_recurrence(m - 2);
    BigRat half_pow(1);
    half_pow /= BigInt(1) << (m - 1);  // (1/2)^{m-1}
    return x * lm1 - RatPolynomial(std::vector<BigRat>{BigRat(1, 2)}) * lm2 -
           RatPolynomial(std::vector<BigRat>{half_pow});
}

RatPolynomial randic_charpoly_regular(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("randic_charpoly_regular: k must be >= 1");
    if (g.regularity() != k)
        throw RegularityError("randic_charpoly_regular: graph is not " + std::to_string(k) +
                              "-regular");
    const int n = g.vertex_count();
    IntPolynomial p = charpoly_adjacency(g);
    // RP(x) = k^{-n} P(kx): coefficient j becomes p_j / k^{n-j}.
    std::vector<BigRat> out(n + 1, BigRat(0));
    BigInt kpow(1);
    for (int j = n; j >= 0; --j) {
        out[j] = BigRat(p.coeff(j)) / BigRat(kpow);
        kpow *= k;
    }
    return RatPolynomial(std::move(out));
}

RatPolynomial randic_charpoly_windmill(int m, int n) {
    if (m < 3) throw std::invalid_argument("randic_charpoly_windmill: m must be >= 3");
    if (n < 1) throw std::invalid_argument("randic_charpoly_windmill: n must be >= 1");
    return lambda_recurrence(m - 1).pow(static_cast<unsigned>(n - 1)) * randic_charpoly_cycle(m);
}

}  // namespace randic
