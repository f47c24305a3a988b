#pragma once

// The rotation-equivariant cohomology ring of S^2, the pairing against the
// class B = (p,q), the moduli dimension via both routes, the top
// intersection number behind the nonzero invariant, and the common-zero test
// for section pairs (exact resultants).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vortexlab {

// Element of Z[a,b]/(b^3 + a b^2), graded with deg a = deg b = 2.
// Monomial a^i b^j keyed by (i, j); normalized keeps j <= 2 via b^3 -> -a b^2.
struct EquivClass {
    std::map<std::pair<int, int>, long long> coeffs;

    static EquivClass zero() { return {}; }
    static EquivClass monomial(int i, int j, long long c = 1);
    static EquivClass a() { return monomial(1, 0); }
    static EquivClass b() { return monomial(0, 1); }

    EquivClass& normalize();
    bool is_zero() const;
    // 2*(i+j) if homogeneous, -1 otherwise (zero counts as any degree)
    int homogeneous_degree() const;

    EquivClass operator+(const EquivClass& o) const;
    EquivClass operator-(const EquivClass& o) const;
    EquivClass operator*(long long s) const;
};

// Product reduced modulo the ideal.
EquivClass ring_mul(const EquivClass& u, const EquivClass& v);

struct ClassB {
    int p = 0;
    int q = 0;
    // invariants are computed only for 0 != q != p
    void validate() const {
        if (p < 0 || q < 0) throw std::invalid_argument("ClassB: p, q must be nonnegative");
        if (q == 0 || q == p) throw std::invalid_argument("ClassB: need 0 != q != p");
    }
};

// Linear extension of <a,B> = p-q, <b,B> = -q on degree-2 classes.
long long pair_with_B(const EquivClass& u, const ClassB& B);

// p+q, cross-checked against <a-2b,B> + (n-1)(1-g) with n = 1, g = 0.
long long moduli_dimension(const ClassB& B);

// Coefficient of h1^k1 h2^k2 on the fundamental class of CP^p x CP^q.
long long intersection_number(int p, int q, int k1, int k2);

// The invariant evaluated on p copies of a+b and q copies of b: the count of
// p hyperplanes from the first factor and q from the second, which is 1.
long long invariant_phibar(const ClassB& B);

// True iff the degree-p and degree-q binary forms given by affine
// coefficient lists (constant term first, declared degree fixes the
// homogenization) share no projective root: resultant != 0, exact integers.
bool divisor_pair_check(const std::vector<long long>& f_coeffs,
                        const std::vector<long long>& g_coeffs);

}  // namespace vortexlab
