#include "vortexlab/weights.hpp"

#include <algorithm>
#include <cmath>

namespace vortexlab {

namespace {

double norm_all(const std::vector<cplxw>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

double to_d(const Rational& r) {
    return double(r.numerator()) / double(r.denominator());
}

struct Support {
    std::vector<int> idx;
    double nrm = 0.0;
};

Support active_support(const WeightedPoint& p) {
    if (p.coords.size() != p.weights.size())
        throw std::invalid_argument("WeightedPoint: coords/weights size mismatch");
    Support s;
    s.nrm = norm_all(p.coords);
    for (int k = 0; k < int(p.coords.size()); ++k)
        if (coord_active(p.coords[k], s.nrm)) s.idx.push_back(k);
    return s;
}

}  // namespace

bool coord_active(const cplxw& x, double nrm) { return std::abs(x) > 1e-12 * nrm; }

MaxWeight max_weight_linear(const WeightedPoint& p) {
    if (p.mode != PointMode::linear) throw std::invalid_argument("expected linear mode");
    const Support s = active_support(p);
    for (int k : s.idx)
        if (p.weights[k] > 0) return MaxWeight::inf();
    return MaxWeight::of(0);
}

MaxWeight max_weight_projective(const WeightedPoint& p) {
    if (p.mode != PointMode::projective) throw std::invalid_argument("expected projective mode");
    const Support s = active_support(p);
    if (s.idx.empty()) throw std::invalid_argument("max_weight_projective: zero vector");
    Rational best = p.weights[s.idx.front()];
    for (int k : s.idx) best = std::max(best, p.weights[k]);
    return MaxWeight::of(best);
}

double lambda_t_projective(const WeightedPoint& p, double t) {
    if (p.mode != PointMode::projective) throw std::invalid_argument("expected projective mode");
    const Support s = active_support(p);
    if (s.idx.empty()) throw std::invalid_argument("lambda_t_projective: zero vector");
    double emax = -1e300;
    for (int k : s.idx) emax = std::max(emax, 2.0 * t * to_d(p.weights[k]));
    double num = 0.0, den = 0.0;
    for (int k : s.idx) {
        const double lk = to_d(p.weights[k]);
        const double e = std::exp(2.0 * t * lk - emax) * std::norm(p.coords[k]);
        num += lk * e;
        den += e;
    }
    return num / den;
}

PsiValue psi_projective(const WeightedPoint& p, double s_scale) {
    if (p.mode != PointMode::projective) throw std::invalid_argument("expected projective mode");
    const Support s = active_support(p);
    if (s.idx.empty()) throw std::invalid_argument("psi_projective: zero vector");

    PsiValue out;
    // closed form, stabilized: (1/4) [ log sum e^{2 s lk}|xk|^2 - log sum |xk|^2 ]
    double emax = 0.0;  // include the t=0 reference in the max for stability
    for (int k : s.idx) emax = std::max(emax, 2.0 * s_scale * to_d(p.weights[k]));
    double num = 0.0, den = 0.0;
    for (int k : s.idx) {
        const double lk = to_d(p.weights[k]);
        num += std::exp(2.0 * s_scale * lk - emax) * std::norm(p.coords[k]);
        den += std::norm(p.coords[k]);
    }
    out.closed_form = 0.25 * (std::log(num) + emax - std::log(den));

    // 64-node Gauss-Legendre on [0,1] of lambda_t(x; s_scale*s), using
    // lambda_t(x; a*s) = a * lambda_{t*a}(x; s).
    static const int N = 64;
    static std::vector<double> nodes, wts;
    if (nodes.empty()) {
        nodes.resize(N);
        wts.resize(N);
        // Newton on Legendre P_N over [-1,1]
        for (int i = 0; i < N; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (N + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= N; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= N; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = N * (x * p1 - p0) / (x * x - 1.0);
            nodes[i] = x;
            wts[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
        const double t = 0.5 * (nodes[i] + 1.0);
        acc += 0.5 * wts[i] * s_scale * lambda_t_projective(p, t * s_scale);
    }
    out.quadrature = acc;
    return out;
}

namespace {

CRat cr_mul(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CRat cr_sub(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
CRat cr_div(const CRat& a, const CRat& b) {
    const Rational d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

}  // namespace

int rank_exact(const CRatMatrix& columns, int rows) {
    // row-echelon over the Gaussian rationals, working on a copy laid out as rows
    const int cols = int(columns.size());
    std::vector<std::vector<CRat>> M(rows, std::vector<CRat>(cols));
    for (int c = 0; c < cols; ++c) {
        if (int(columns[c].size()) != rows)
            throw std::invalid_argument("rank_exact: ragged matrix");
        for (int r = 0; r < rows; ++r) M[r][c] = columns[c][r];
    }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!M[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        const CRat pv = M[rank][c];
        for (int r = rank + 1; r < rows; ++r) {
            if (M[r][c].is_zero()) continue;
            const CRat fac = cr_div(M[r][c], pv);
            for (int cc = c; cc < cols; ++cc) M[r][cc] = cr_sub(M[r][cc], cr_mul(fac, M[rank][cc]));
        }
        ++rank;
    }
    return rank;
}

Rational max_weight_grassmann(const GrassData& g) {
    const int R = g.ambient_dim;
    const int k = int(g.plane.size());
    if (k == 0 || rank_exact(g.plane, R) != k)
        throw std::invalid_argument("max_weight_grassmann: rank-deficient plane");
    const int r = int(g.eigen_flags.size());
    if (r == 0) throw std::invalid_argument("max_weight_grassmann: empty eigen data");
    for (int j = 1; j < r; ++j)
        if (!(g.eigen_flags[j - 1].eigenvalue < g.eigen_flags[j].eigenvalue))
            throw std::invalid_argument("max_weight_grassmann: eigenvalues must increase strictly");
    if (int(g.eigen_flags.back().subspace.size()) != R)
        throw std::invalid_argument("max_weight_grassmann: E_r must be the full space");

    Rational acc = Rational(k) * g.eigen_flags.back().eigenvalue;
    for (int j = 0; j + 1 < r; ++j) {
        const auto& Ej = g.eigen_flags[j].subspace;
        CRatMatrix stacked = g.plane;
        stacked.insert(stacked.end(), Ej.begin(), Ej.end());
        const int meet = k + int(Ej.size()) - rank_exact(stacked, R);
        const Rational alpha = g.eigen_flags[j].eigenvalue - g.eigen_flags[j + 1].eigenvalue;
        acc += Rational(meet) * alpha;
    }
    return g.tau * acc;
}

int max_weight_s2(const cplxw& x, const cplxw& y, S2Direction dir) {
    const double nrm = std::sqrt(std::norm(x) + std::norm(y));
    if (nrm == 0.0) throw std::invalid_argument("max_weight_s2: zero pair");
    const bool x_zero = !coord_active(x, nrm);
    const bool y_zero = !coord_active(y, nrm);
    if (dir == S2Direction::plus_i) return y_zero ? -1 : 1;
    return x_zero ? -1 : 1;
}

KempfNessResult kempf_ness_find_zero(const WeightedPoint& p, double c_offset) {
    if (p.mode != PointMode::projective) throw std::invalid_argument("expected projective mode");
    const Support s = active_support(p);
    if (s.idx.empty()) throw std::invalid_argument("kempf_ness_find_zero: zero vector");

    KempfNessResult res;
    Rational wmax = p.weights[s.idx.front()], wmin = wmax;
    for (int k : s.idx) {
        wmax = std::max(wmax, p.weights[k]);
        wmin = std::min(wmin, p.weights[k]);
    }
    // lambda(x;s) - c > 0 and lambda(x;-s) + c > 0
    if (!(to_d(wmax) - c_offset > 0.0) || !(-to_d(wmin) + c_offset > 0.0)) {
        res.stable = false;
        return res;
    }
    res.stable = true;

    auto lam = [&](double t) { return lambda_t_projective(p, t); };
    // bracket the root of the nondecreasing function lam(t) - c_offset
    double lo = 0.0, hi = 0.0;
    if (lam(0.0) < c_offset) {
        hi = 1.0;
        while (lam(hi) < c_offset) {
            lo = hi;
            hi *= 2.0;
            ++res.iterations;
            if (hi > 1e8) break;
        }
    } else {
        lo = -1.0;
        while (lam(lo) > c_offset) {
            hi = lo;
            lo *= 2.0;
            ++res.iterations;
            if (lo < -1e8) break;
        }
    }
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        ++res.iterations;
        const double v = lam(t);
        if (std::abs(v - c_offset) < 1e-13) break;
        if (v < c_offset)
            lo = t;
        else
            hi = t;
        t = 0.5 * (lo + hi);
    }
    res.t_star = t;
    res.moment_value = lam(t);
    res.point.resize(p.coords.size());
    // e^{i t s} scales coordinate k by e^{t lambda_k}; rescale by the largest
    // factor to keep the lift representable
    double emax = -1e300;
    for (int k = 0; k < int(p.coords.size()); ++k)
        emax = std::max(emax, t * to_d(p.weights[k]));
    for (int k = 0; k < int(p.coords.size()); ++k)
        res.point[k] = p.coords[k] * std::exp(t * to_d(p.weights[k]) - emax);
    return res;
}

}  // namespace vortexlab
