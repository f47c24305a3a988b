#pragma once

// Equivariant indices of holomorphic bundles over CP^1 under circle and
// cyclic actions: closed forms from fixed-point weight counts, an
// independent oracle by Borel-Weil weight enumeration, root-of-unity sums,
// virtual dimensions and the bubble-codimension inequality.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vortexlab {

enum class GroupKind { circle, cyclic };

// Fixed-point weight counts (P,Z,N at each pole) of a lifted action on a
// bundle over CP^1. Weights live in {-1,0,1} for the circle and {-l,0,l}
// (mod m) for Z/m, per the almost-free hypothesis.
struct WeightData {
    GroupKind group = GroupKind::circle;
    int rank = 0;
    long long deg = 0;
    int Pp = 0, Zp = 0, Np = 0;  // at x_+
    int Pm = 0, Zm = 0, Nm = 0;  // at x_-
    int m = 0;                   // cyclic only, m >= 2
    int l = 0;                   // cyclic only, reduced into [1, m-1]

    static WeightData circle(int rank, long long deg, int Pp, int Zp, int Np, int Pm, int Zm,
                             int Nm);
    static WeightData cyclic(int m, int l, int rank, long long deg, int Pp, int Zp, int Np,
                             int Pm, int Zm, int Nm);
};

// One line-bundle summand O(lambda) with the fiber weights of the lifted
// action at the two poles. Circle lifts satisfy a_plus - a_minus = lambda
// exactly; cyclic lifts satisfy it mod m.
struct Summand {
    long long lambda = 0;
    long long a_plus = 0;
    long long a_minus = 0;
};

struct SplitBundle {
    GroupKind group = GroupKind::circle;
    int m = 0, l = 0;  // cyclic only
    std::vector<Summand> summands;

    int rank() const { return int(summands.size()); }
    long long deg() const;
    void validate() const;
    WeightData to_weight_data() const;
};

// (P_+ + Z_+) + (N_- + Z_-) - rk(E), exact.
long long index_s1(const WeightData& w);

// (1/m)(deg + m*rk - m(P_- + N_+) + l'(P_- + N_+ - P_+ - N_-)); asserts the
// result is an integer and throws std::domain_error otherwise.
long long index_cyclic(const WeightData& w);

// Independent oracle: enumerate the Borel-Weil weights of H^0 and H^1 of
// each summand; circle counts zero weights directly, cyclic averages the
// characters over the group with complex arithmetic (residual guard 1e-9).
long long index_oracle(const SplitBundle& b);

// ( sum_{k=1}^{m-1} 1/(1-theta^k), sum_{k=1}^{m-1} theta^{wk}/(1-theta^k) ),
// theta = exp(2*pi*i/m), computed directly.
std::pair<std::complex<double>, std::complex<double>> roots_of_unity_sums(int m, int w);

// <c1^K(TF) - pi* c1^K(g), B> + (n - dim k)(1 - g).
long long virtual_dimension(long long c1_pairing, int n, int g, int dim_k,
                            long long c1_g_pairing);

// Ind_gamma(E) <= Ind(E) - 2 = deg + rk - 2, under deg >= 1 and
// P_+ + N_+ + P_- + N_- >= 2 (throws std::domain_error if the
// preconditions fail).
bool bubble_codim_check(const WeightData& w);

}  // namespace vortexlab
