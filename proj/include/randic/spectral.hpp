#ifndef RANDIC_SPECTRAL_HPP
#define RANDIC_SPECTRAL_HPP

#include <string>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

/// Dense symmetric matrix of doubles; writes mirror across the diagonal so
/// symmetry holds by construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

/// All eigenvalues, sorted non-increasing, plus the residual
/// max_i ||M v_i - lambda_i v_i||_2 achieved by the solver.
struct Spectrum {
    std::vector<double> values;
    double residual = 0.0;
};

/// R(G): entry (i,j) = 1/sqrt(d_i d_j) on edges, 0 elsewhere. Rows and
/// columns of isolated vertices are zero.
SymMatrix randic_matrix(const Graph& g);

/// A(G) as doubles.
SymMatrix adjacency_matrix(const Graph& g);

/// Cyclic Jacobi on a dense symmetric matrix. Sweeps until the off-diagonal
/// Frobenius norm is <= 1e-13 * ||M||_F (at most 100 sweeps), then checks the
/// eigenpair residual against tol; throws ConvergenceError (carrying the best
/// residual) if it is not met. Deterministic for fixed input.
Spectrum eigenvalues_symmetric(const SymMatrix& m, double tol = 1e-12);

/// Graph energy: sum of |eigenvalue| over the adjacency spectrum.
double energy(const Graph& g);

/// Randic energy: sum of |eigenvalue| over the Randic spectrum, always
/// computed numerically from R(G).
double randic_energy(const Graph& g);

enum class EnergyMethod { numeric, regular_shortcut };

std::string to_string(EnergyMethod m);

struct EnergyReport {
    std::string id;
    int n = 0;
    int edges = 0;
    double energy = 0.0;
    double randic_energy = 0.0;
    EnergyMethod method = EnergyMethod::numeric;
    std::vector<double> spectrum;  // adjacency spectrum, non-increasing

    /// {"id","n","edges","energy","randic_energy","method","spectrum"},
    /// floats rendered with 12 significant digits.
    std::string to_json() const;
};

/// E and RE for a graph; uses the E/k shortcut for k-regular graphs (k >= 1)
/// and records the method accordingly.
EnergyReport make_energy_report(const Graph& g, std::string id);

/// Size of the multiset difference a \ b after tolerance-bucketed matching.
/// Spectra must have equal lengths.
int spectra_difference(const Spectrum& a, const Spectrum& b, double tol = 1e-6);

}  // namespace randic

#endif
