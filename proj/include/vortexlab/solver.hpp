#pragma once

// Gradient-flow minimizer of the Yang-Mills-Higgs functional over link
// angles and Higgs values. Plain gradient descent with Armijo backtracking;
// stopping on the sup-norm residuals of the two equations.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vortexlab/lattice.hpp"

namespace vortexlab {

enum class LineSearch { armijo, fixed };

struct SolverConfig {
    int max_iters = 20000;
    double step = 0.05;
    double tol_residual = 1e-8;
    LineSearch line_search = LineSearch::armijo;
    std::uint64_t seed = 1;
    int record_every = 100;
};

struct TracePoint {
    int iter = 0;
    double energy = 0.0;
    double residual_eq1 = 0.0;
    double residual_eq2 = 0.0;
};

struct SolveReport {
    int iterations = 0;
    double final_energy = 0.0;
    YmhTerms term_breakdown;
    double residual_eq1 = 0.0;  // sup-norm of dbar_A Phi
    double residual_eq2 = 0.0;  // sup-norm of f + m - c
    std::vector<TracePoint> energy_trace;
    bool converged = false;
    double bogomolov = 0.0;
};

struct YmhGradient {
    std::vector<double> d_angles_x;
    std::vector<double> d_angles_y;
    std::vector<cplx> d_phi;  // Wirtinger dE/d(conj Phi); real gradient is (2Re, 2Im)
};

// Exact gradient of the discrete ymh_energy with respect to every link angle
// and every complex Higgs entry.
YmhGradient ymh_gradient(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                         const TorusLattice& L);

// Sup-norm residuals of the two equations.
double residual_dbar(const LinkField& A, const HiggsField& phi, const TorusLattice& L);
double residual_moment(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                       const TorusLattice& L);

// Seeded default initialization: background_connection(d) plus uniform link
// noise (amplitude 0.05), Phi i.i.d. complex Gaussian with E|Phi_j|^2 = tau.
std::pair<LinkField, HiggsField> init_fields(int d, const std::vector<int>& weights, double tau,
                                             const TorusLattice& L, std::uint64_t seed,
                                             double link_noise = 0.05);

// Minimize YMH from (A0, phi0); deterministic for fixed inputs and config.
// Throws std::runtime_error if the energy turns non-finite.
SolveReport solve(LinkField& A, HiggsField& phi, const CentralParam& c, const TorusLattice& L,
                  const SolverConfig& cfg);

// Cells with |Phi| below 0.1*median(|Phi|), clustered by periodic
// 4-adjacency; returns the cluster count.
int count_vortices(const HiggsField& phi);

// Integrated-obstruction diagnostic of the second equation:
// 2*pi*d/Vol + mean(m) - c. Zero is necessary for solvability.
double integrated_obstruction(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                              const TorusLattice& L);

}  // namespace vortexlab
