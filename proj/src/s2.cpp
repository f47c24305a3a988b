#include "vortexlab/s2.hpp"

#include "vortexlab/eqindex.hpp"

namespace vortexlab {

EquivClass EquivClass::monomial(int i, int j, long long c) {
    EquivClass e;
    if (c != 0) e.coeffs[{i, j}] = c;
    return e.normalize();
}

EquivClass& EquivClass::normalize() {
    // rewrite b^3 -> -a b^2 until every exponent of b is <= 2
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
            const auto [i, j] = it->first;
            const long long c = it->second;
            if (c == 0) {
                coeffs.erase(it);
                changed = true;
                break;
            }
            if (j >= 3) {
                coeffs.erase(it);
                coeffs[{i + 1, j - 1}] -= c;
                changed = true;
                break;
            }
        }
    }
    return *this;
}

bool EquivClass::is_zero() const {
    for (const auto& [k, c] : coeffs)
        if (c != 0) return false;
    return true;
}

int EquivClass::homogeneous_degree() const {
    int deg = -1;
    for (const auto& [k, c] : coeffs) {
        if (c == 0) continue;
        const int d = 2 * (k.first + k.second);
        if (deg == -1) deg = d;
        else if (deg != d) return -1;
    }
    return deg;
}

EquivClass EquivClass::operator+(const EquivClass& o) const {
    EquivClass r = *this;
    for (const auto& [k, c] : o.coeffs) r.coeffs[k] += c;
    return r.normalize();
}

EquivClass EquivClass::operator-(const EquivClass& o) const {
    EquivClass r = *this;
    for (const auto& [k, c] : o.coeffs) r.coeffs[k] -= c;
    return r.normalize();
}

EquivClass EquivClass::operator*(long long s) const {
    EquivClass r = *this;
    for (auto& [k, c] : r.coeffs) c *= s;
    return r.normalize();
}

EquivClass ring_mul(const EquivClass& u, const EquivClass& v) {
    EquivClass r;
    for (const auto& [ku, cu] : u.coeffs)
        for (const auto& [kv, cv] : v.coeffs)
            r.coeffs[{ku.first + kv.first, ku.second + kv.second}] += cu * cv;
    return r.normalize();
}

long long pair_with_B(const EquivClass& u, const ClassB& B) {
    EquivClass n = u;
    n.normalize();
    if (n.is_zero()) return 0;
    if (n.homogeneous_degree() != 2)
        throw std::invalid_argument("pair_with_B: class must be homogeneous of degree 2");
    long long acc = 0;
    for (const auto& [k, c] : n.coeffs) {
        if (k == std::pair<int, int>{1, 0}) acc += c * (long long)(B.p - B.q);
        else if (k == std::pair<int, int>{0, 1}) acc += c * (long long)(-B.q);
    }
    return acc;
}

long long moduli_dimension(const ClassB& B) {
    B.validate();
    const long long direct = (long long)B.p + B.q;
    const EquivClass c1 = EquivClass::a() - EquivClass::b() * 2;  // c1^{S^1}(TS^2) = a - 2b
    const long long via_index = virtual_dimension(pair_with_B(c1, B), 1, 0, 1, 0);
    if (direct != via_index)
        throw std::logic_error("moduli_dimension: dimension routes disagree");
    return direct;
}

long long intersection_number(int p, int q, int k1, int k2) {
    if (p < 0 || q < 0 || k1 < 0 || k2 < 0)
        throw std::invalid_argument("intersection_number: negative input");
    // multidegree bookkeeping in H*(CP^p x CP^q): h1^k1 h2^k2 pairs to 1 on
    // the fundamental class iff (k1, k2) = (p, q); higher powers vanish
    if (k1 > p || k2 > q) return 0;
    return (k1 == p && k2 == q) ? 1 : 0;
}

long long invariant_phibar(const ClassB& B) {
    B.validate();
    return intersection_number(B.p, B.q, B.p, B.q);
}

namespace {

// Bareiss fraction-free determinant, exact over the integers.
__int128 det_bareiss(std::vector<std::vector<__int128>> M) {
    const int n = int(M.size());
    if (n == 0) return 1;
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (M[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

}  // namespace

bool divisor_pair_check(const std::vector<long long>& f_coeffs,
                        const std::vector<long long>& g_coeffs) {
    auto all_zero = [](const std::vector<long long>& v) {
        for (long long c : v)
            if (c != 0) return false;
        return true;
    };
    if (f_coeffs.empty() || g_coeffs.empty() || all_zero(f_coeffs) || all_zero(g_coeffs))
        throw std::invalid_argument("divisor_pair_check: zero polynomial");
    const int p = int(f_coeffs.size()) - 1;  // declared degree of the homogenization
    const int q = int(g_coeffs.size()) - 1;
    if (p == 0 && q == 0) return true;  // two nonzero constants never share a root
    // Sylvester matrix of the homogenizations, size (p+q); a vanishing
    // declared-leading coefficient makes the resultant detect the common
    // root at infinity automatically.
    const int n = p + q;
    std::vector<std::vector<__int128>> S(n, std::vector<__int128>(n, 0));
    for (int r = 0; r < q; ++r)
        for (int i = 0; i <= p; ++i) S[r][r + i] = f_coeffs[p - i];
    for (int r = 0; r < p; ++r)
        for (int i = 0; i <= q; ++i) S[q + r][r + i] = g_coeffs[q - i];
    return det_bareiss(std::move(S)) != 0;
}

}  // namespace vortexlab
