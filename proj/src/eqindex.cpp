#include "vortexlab/eqindex.hpp"

#include <cmath>

namespace vortexlab {

namespace {

int modm(long long a, int m) {
    int r = int(a % m);
    return r < 0 ? r + m : r;
}

void check_counts(const WeightData& w) {
    if (w.rank < 1) throw std::invalid_argument("WeightData: rank must be >= 1");
    if (w.Pp < 0 || w.Zp < 0 || w.Np < 0 || w.Pm < 0 || w.Zm < 0 || w.Nm < 0)
        throw std::invalid_argument("WeightData: counts must be nonnegative");
    if (w.Pp + w.Zp + w.Np != w.rank || w.Pm + w.Zm + w.Nm != w.rank)
        throw std::invalid_argument("WeightData: counts at each pole must sum to rank");
}

}  // namespace

WeightData WeightData::circle(int rank, long long deg, int Pp, int Zp, int Np, int Pm, int Zm,
                              int Nm) {
    WeightData w;
    w.group = GroupKind::circle;
    w.rank = rank;
    w.deg = deg;
    w.Pp = Pp; w.Zp = Zp; w.Np = Np;
    w.Pm = Pm; w.Zm = Zm; w.Nm = Nm;
    check_counts(w);
    if (deg != Pp + Nm - Pm - Np)
        throw std::invalid_argument("WeightData: circle degree constraint deg = P+ + N- - P- - N+");
    return w;
}

WeightData WeightData::cyclic(int m, int l, int rank, long long deg, int Pp, int Zp, int Np,
                              int Pm, int Zm, int Nm) {
    if (m < 2) throw std::invalid_argument("WeightData: cyclic needs m >= 2");
    WeightData w;
    w.group = GroupKind::cyclic;
    w.m = m;
    w.l = modm(l, m);
    if (w.l == 0) throw std::invalid_argument("WeightData: weight l must not be divisible by m");
    w.rank = rank;
    w.deg = deg;
    w.Pp = Pp; w.Zp = Zp; w.Np = Np;
    w.Pm = Pm; w.Zm = Zm; w.Nm = Nm;
    check_counts(w);
    return w;
}

long long SplitBundle::deg() const {
    long long d = 0;
    for (const auto& s : summands) d += s.lambda;
    return d;
}

void SplitBundle::validate() const {
    if (summands.empty()) throw std::invalid_argument("SplitBundle: empty");
    for (const auto& s : summands) {
        if (group == GroupKind::circle) {
            if (s.a_plus - s.a_minus != s.lambda)
                throw std::invalid_argument("SplitBundle: circle lift needs a+ - a- = lambda");
            if (std::abs(s.a_plus) > 1 || std::abs(s.a_minus) > 1)
                throw std::invalid_argument("SplitBundle: circle weights must lie in {-1,0,1}");
        } else {
            if (m < 2 || l < 1 || l > m - 1)
                throw std::invalid_argument("SplitBundle: cyclic needs m >= 2, 1 <= l <= m-1");
            if (modm(s.a_plus - s.a_minus - s.lambda, m) != 0)
                throw std::invalid_argument("SplitBundle: cyclic lift needs a+ - a- = lambda mod m");
            for (long long a : {s.a_plus, s.a_minus})
                if (a != 0 && a != l && a != -l && modm(a, m) != modm(l, m) &&
                    modm(a, m) != modm(-l, m))
                    throw std::invalid_argument("SplitBundle: cyclic weights must lie in {-l,0,l}");
        }
    }
}

WeightData SplitBundle::to_weight_data() const {
    validate();
    WeightData w;
    w.group = group;
    w.m = m;
    w.l = l;
    w.rank = rank();
    w.deg = deg();
    auto classify = [&](long long a, int& P, int& Z, int& N) {
        if (group == GroupKind::circle) {
            if (a > 0) ++P;
            else if (a < 0) ++N;
            else ++Z;
        } else {
            if (a == 0) ++Z;
            else if (a == l) ++P;
            else if (a == -l) ++N;
            else {
                const int r = modm(a, m);
                if (r == 0) ++Z;
                else if (r == modm(l, m)) ++P;
                else ++N;
            }
        }
    };
    for (const auto& s : summands) {
        classify(s.a_plus, w.Pp, w.Zp, w.Np);
        classify(s.a_minus, w.Pm, w.Zm, w.Nm);
    }
    return w;
}

long long index_s1(const WeightData& w) {
    if (w.group != GroupKind::circle) throw std::invalid_argument("index_s1: circle mode only");
    check_counts(w);
    if (w.deg != w.Pp + w.Nm - w.Pm - w.Np)
        throw std::invalid_argument("index_s1: inconsistent WeightData");
    return (w.Pp + w.Zp) + (w.Nm + w.Zm) - w.rank;
}

long long index_cyclic(const WeightData& w) {
    if (w.group != GroupKind::cyclic) throw std::invalid_argument("index_cyclic: cyclic mode only");
    check_counts(w);
    const long long m = w.m, lp = w.l;
    const long long num = w.deg + m * w.rank - m * (w.Pm + w.Np) +
                          lp * (long long(w.Pm) + w.Np - w.Pp - w.Nm);
    if (num % m != 0)
        throw std::domain_error("index_cyclic: non-integral result, inconsistent weight data");
    return num / m;
}

namespace {

// Borel-Weil weights of the lifted action on H^0/H^1 of one summand:
// H^0(O(L)), L >= 0: {a+ - t : t = 0..L};  H^1(O(L)), L <= -2: {a+ + 1 + t : t = 0..-L-2}.
template <class F0, class F1>
void enumerate_weights(const Summand& s, F0&& h0, F1&& h1) {
    if (s.lambda >= 0)
        for (long long t = 0; t <= s.lambda; ++t) h0(s.a_plus - t);
    if (s.lambda <= -2)
        for (long long t = 0; t <= -s.lambda - 2; ++t) h1(s.a_plus + 1 + t);
}

}  // namespace

long long index_oracle(const SplitBundle& b) {
    b.validate();
    if (b.group == GroupKind::circle) {
        long long ind = 0;
        for (const auto& s : b.summands)
            enumerate_weights(
                s, [&](long long x) { ind += (x == 0); }, [&](long long x) { ind -= (x == 0); });
        return ind;
    }
    // cyclic: average the characters over the group
    const int m = b.m;
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k < m; ++k) {
        const double ang = 2.0 * M_PI * k / m;
        std::complex<double> tr(0.0, 0.0);
        for (const auto& s : b.summands)
            enumerate_weights(
                s,
                [&](long long x) { tr += std::polar(1.0, ang * modm(x, m)); },
                [&](long long x) { tr -= std::polar(1.0, ang * modm(x, m)); });
        acc += tr;
    }
    acc /= double(m);
    const double rounded = std::round(acc.real());
    if (std::abs(acc.real() - rounded) > 1e-9 || std::abs(acc.imag()) > 1e-9)
        throw std::domain_error("index_oracle: character average is not an integer");
    return (long long)rounded;
}

std::pair<std::complex<double>, std::complex<double>> roots_of_unity_sums(int m, int w) {
    if (m < 2 || w < 1 || w > m - 1)
        throw std::invalid_argument("roots_of_unity_sums: need m >= 2, 1 <= w <= m-1");
    std::complex<double> s1(0, 0), s2(0, 0);
    for (int k = 1; k < m; ++k) {
        const std::complex<double> theta_k = std::polar(1.0, 2.0 * M_PI * k / m);
        s1 += 1.0 / (1.0 - theta_k);
        s2 += std::polar(1.0, 2.0 * M_PI * k * w / m) / (1.0 - theta_k);
    }
    return {s1, s2};
}

long long virtual_dimension(long long c1_pairing, int n, int g, int dim_k,
                            long long c1_g_pairing) {
    return (c1_pairing - c1_g_pairing) + (long long)(n - dim_k) * (1 - g);
}

bool bubble_codim_check(const WeightData& w) {
    check_counts(w);
    if (w.deg < 1) throw std::domain_error("bubble_codim_check: requires deg >= 1");
    if (w.Pp + w.Np + w.Pm + w.Nm < 2)
        throw std::domain_error("bubble_codim_check: requires P+ + N+ + P- + N- >= 2");
    const long long bound = w.deg + w.rank - 2;
    if (w.group == GroupKind::circle) return index_s1(w) <= bound;
    return index_cyclic(w) <= bound;
}

}  // namespace vortexlab
