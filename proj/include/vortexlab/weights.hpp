#pragma once

// Maximal weights of one-parameter subgroups acting on linear, projective,
// Grassmannian and S^2 targets; the integral of the moment map; and a
// scalar Kempf-Ness zero finder on diagonal orbits.
//
// Weights here are the eigenvalues lambda_k of i*rho(s) (see
// docs/conventions.md for how this relates to the lattice module's w_j).

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/rational.hpp>

namespace vortexlab {

using Rational = boost::rational<long long>;
using cplxw = std::complex<double>;

enum class PointMode { linear, projective };

struct WeightedPoint {
    std::vector<cplxw> coords;   // the vector x (linear) or a lift x-hat (projective)
    std::vector<Rational> weights;
    PointMode mode = PointMode::linear;
};

// Tagged value: finite rational or +infinity, never a float sentinel.
struct MaxWeight {
    bool infinite = false;
    Rational value = 0;

    static MaxWeight inf() { return {true, 0}; }
    static MaxWeight of(Rational v) { return {false, v}; }
    bool operator==(const MaxWeight&) const = default;
};

// Support threshold in floating mode: |x_k| > 1e-12 * ||x||.
bool coord_active(const cplxw& x, double norm_all);

// 0 if every active weight is <= 0, else +infinity.
MaxWeight max_weight_linear(const WeightedPoint& p);

// max { lambda_k | x_k != 0 }; always finite. Throws on the zero vector.
MaxWeight max_weight_projective(const WeightedPoint& p);

// sum lambda_k e^{2 t lambda_k} |x_k|^2 / sum e^{2 t lambda_k} |x_k|^2,
// numerically stabilized by factoring out the largest exponent.
double lambda_t_projective(const WeightedPoint& p, double t);

struct PsiValue {
    double closed_form = 0.0;  // (1/4) log(||rho(g)x||^2 / ||x||^2)
    double quadrature = 0.0;   // int_0^1 lambda_t(x; s_scale*s) dt, 64-node Gauss-Legendre
};

// Integral of the moment map along exp(i t s_scale s), both routes reported.
// The two disagree by an exact factor of 2; tests pin the quadrature, which
// is the one consistent with d/dt Psi = lambda_t. Do not silently reconcile.
PsiValue psi_projective(const WeightedPoint& p, double s_scale);

// Complex number with exact rational parts, for exact rank computations.
struct CRat {
    Rational re = 0;
    Rational im = 0;
    bool is_zero() const { return re == 0 && im == 0; }
};

using CRatMatrix = std::vector<std::vector<CRat>>;  // list of columns

struct GrassData {
    int ambient_dim = 0;   // R
    CRatMatrix plane;      // columns span pi, full column rank
    // eigenvalue lambda_j with the cumulative eigenspace basis E_j (columns)
    struct Flag {
        Rational eigenvalue;
        CRatMatrix subspace;
    };
    std::vector<Flag> eigen_flags;  // lambda_1 < ... < lambda_r, E_r = C^R
    Rational tau = 1;
};

// Rank by exact Gaussian elimination over the Gaussian rationals.
int rank_exact(const CRatMatrix& columns, int rows);

// tau * ( dim(pi) lambda_r + sum_{j<r} dim(pi cap E_j) (lambda_j - lambda_{j+1}) ),
// with dim(pi cap E_j) = dim pi + dim E_j - rank([pi | E_j]), all exact.
Rational max_weight_grassmann(const GrassData& g);

enum class S2Direction { plus_i, minus_i };

// lambda([x:y]; i) = 1 if y != 0 else -1; lambda([x:y]; -i) = -1 if x = 0 else 1.
int max_weight_s2(const cplxw& x, const cplxw& y, S2Direction dir);

struct KempfNessResult {
    bool stable = false;
    double t_star = 0.0;
    std::vector<cplxw> point;  // e^{i t* s} x (lift coordinates)
    double moment_value = 0.0; // <mu(point), s>
    int iterations = 0;
};

// Scalar zero finder for <mu(e^{its}x), s> = c_offset on a diagonal
// one-parameter orbit. Stability precheck via maximal weights; result.stable
// is false (and no zero returned) when the precheck fails.
KempfNessResult kempf_ness_find_zero(const WeightedPoint& p, double c_offset);

}  // namespace vortexlab
