#pragma once

// Lattice discretization of the abelian gauged sigma model on the flat
// 2-torus: link-angle connections, C^r Higgs fields with integer weights,
// curvature, covariant derivatives and the Yang-Mills-Higgs functional.
// Sign conventions are fixed in docs/conventions.md.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vortexlab {

using cplx = std::complex<double>;

struct TorusLattice {
    int n = 0;             // sites per side, n >= 4
    double side_length = 1.0;

    TorusLattice() = default;
    TorusLattice(int n_, double side = 1.0);

    double spacing() const { return side_length / n; }
    double cell_area() const { return spacing() * spacing(); }
    double volume() const { return side_length * side_length; }
    int sites() const { return n * n; }
    int idx(int ix, int iy) const { return ix * n + iy; }
};

// U(1) connection as per-edge angles; angles_x[s] is the angle on the +x
// edge out of site s, row-major site (ix,iy) at ix*n+iy.
struct LinkField {
    int n = 0;
    int degree = 0;
    std::vector<double> angles_x;
    std::vector<double> angles_y;

    LinkField() = default;
    LinkField(int n_, int degree_ = 0)
        : n(n_), degree(degree_), angles_x(n_ * n_, 0.0), angles_y(n_ * n_, 0.0) {}
};

// Section of the associated C^r bundle; values[(ix*n+iy)*r + j] is component
// j at site (ix,iy); weights[j] is the S^1 weight of component j.
struct HiggsField {
    int n = 0;
    std::vector<int> weights;
    std::vector<cplx> values;

    HiggsField() = default;
    HiggsField(int n_, std::vector<int> weights_)
        : n(n_), weights(std::move(weights_)), values(size_t(n_) * n_ * weights.size(), cplx(0, 0)) {}

    int rank() const { return int(weights.size()); }
    cplx& at(int ix, int iy, int j) { return values[(size_t(ix) * n + iy) * rank() + j]; }
    const cplx& at(int ix, int iy, int j) const { return values[(size_t(ix) * n + iy) * rank() + j]; }
};

// Central element i*c plus the symplectic scale tau (bookkeeping only).
struct CentralParam {
    double c = 0.0;
    double tau = 1.0;
};

struct YmhTerms {
    double curvature = 0.0;  // ||F_A||^2
    double kinetic = 0.0;    // ||d_A Phi||^2
    double moment = 0.0;     // ||mu(Phi) - c||^2
    double total() const { return curvature + kinetic + moment; }
};

// wrap to the principal branch (-pi, pi]
double wrap_angle(double a);

void check_shapes(const LinkField& A, const TorusLattice& L);
void check_shapes(const LinkField& A, const HiggsField& phi, const TorusLattice& L);

// Wrapped plaquette angle (counterclockwise loop) divided by cell area;
// approximates Lambda F_A / i as a real scalar field.
std::vector<double> plaquette_curvature(const LinkField& A, const TorusLattice& L);

// Sum of wrapped plaquette angles; equals 2*pi*degree up to round-off.
double total_curvature(const LinkField& A, const TorusLattice& L);

// Uniform-curvature degree-d configuration with one transition row.
// Requires |d| <= n/2 so plaquette angles stay inside the principal branch.
LinkField background_connection(int d, const TorusLattice& L);

// Forward covariant differences (D_x Phi, D_y Phi), each shaped like phi.values.
struct CovariantDerivative {
    std::vector<cplx> dx;
    std::vector<cplx> dy;
};
CovariantDerivative covariant_derivative(const LinkField& A, const HiggsField& phi,
                                         const TorusLattice& L);

// (0,1) part (D_x + i D_y)/2 of the covariant differences.
std::vector<cplx> dbar(const LinkField& A, const HiggsField& phi, const TorusLattice& L);
// (1,0) part (D_x - i D_y)/2.
std::vector<cplx> del(const LinkField& A, const HiggsField& phi, const TorusLattice& L);

// m = -(1/2) sum_j w_j |Phi_j|^2 per site (mu = i*m). Gauge invariant.
std::vector<double> moment_map_linear(const HiggsField& phi);

// Full functional and the three summands, Riemann sums with cell weight h^2.
YmhTerms ymh_energy(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                    const TorusLattice& L);

// L^2 norms entering the rewritten functional (see docs/conventions.md):
// (0,1)/(1,0) components carry the metric factor 2.
double norm2_dbar(const LinkField& A, const HiggsField& phi, const TorusLattice& L);
double norm2_del(const LinkField& A, const HiggsField& phi, const TorusLattice& L);
// int <Lambda F_A, c>  (topological: equals 2*pi*degree*c up to round-off)
double curvature_c_pairing(const LinkField& A, const CentralParam& c, const TorusLattice& L);
// int <Lambda F_A, mu(Phi)>
double curvature_moment_pairing(const LinkField& A, const HiggsField& phi,
                                const TorusLattice& L);

// |YMH - (||LF+mu-c||^2 + 2||dbar||^2 + 2 int<LF,c>)|: the lattice defect of
// the energy identity for the linear target (whose Kaehler constant is zero).
// Shrinks first order under refinement.
double energy_identity_defect(const LinkField& A, const HiggsField& phi,
                              const CentralParam& c, const TorusLattice& L);

// int<LF,c> + [ (||del||^2 - ||dbar||^2)/2 - int<LF,mu> ]: lattice value of
// the Bogomolov combination; >= -tolerance on converged solutions.
double bogomolov_value(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                       const TorusLattice& L);

// Site-wise gauge rotation (links by boundary angles, Phi_j by e^{i w_j g}).
void apply_gauge(LinkField& A, HiggsField& phi, const std::vector<double>& g);

}  // namespace vortexlab
