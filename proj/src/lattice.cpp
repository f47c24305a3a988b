#include "vortexlab/lattice.hpp"

#include <cmath>

namespace vortexlab {

TorusLattice::TorusLattice(int n_, double side) : n(n_), side_length(side) {
    if (n < 4) throw std::invalid_argument("TorusLattice: n must be >= 4");
    if (!(side > 0.0)) throw std::invalid_argument("TorusLattice: side_length must be > 0");
}

double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * M_PI);  // (-pi, pi], remainder ties go to even
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

void check_shapes(const LinkField& A, const TorusLattice& L) {
    if (A.n != L.n || int(A.angles_x.size()) != L.sites() || int(A.angles_y.size()) != L.sites())
        throw std::invalid_argument("LinkField/TorusLattice shape mismatch");
}

void check_shapes(const LinkField& A, const HiggsField& phi, const TorusLattice& L) {
    check_shapes(A, L);
    if (phi.n != L.n || phi.values.size() != size_t(L.sites()) * phi.rank())
        throw std::invalid_argument("HiggsField/TorusLattice shape mismatch");
}

namespace {
inline int wrapi(int i, int n) { return i >= n ? i - n : i; }
}  // namespace

std::vector<double> plaquette_curvature(const LinkField& A, const TorusLattice& L) {
    check_shapes(A, L);
    const int n = L.n;
    const double inv_area = 1.0 / L.cell_area();
    std::vector<double> f(L.sites());
    for (int ix = 0; ix < n; ++ix) {
        const int ixp = wrapi(ix + 1, n);
        for (int iy = 0; iy < n; ++iy) {
            const int iyp = wrapi(iy + 1, n);
            const double p = A.angles_x[L.idx(ix, iy)] + A.angles_y[L.idx(ixp, iy)] -
                             A.angles_x[L.idx(ix, iyp)] - A.angles_y[L.idx(ix, iy)];
            f[L.idx(ix, iy)] = wrap_angle(p) * inv_area;
        }
    }
    return f;
}

double total_curvature(const LinkField& A, const TorusLattice& L) {
    const auto f = plaquette_curvature(A, L);
    double s = 0.0;
    for (double v : f) s += v;
    return s * L.cell_area();
}

LinkField background_connection(int d, const TorusLattice& L) {
    if (2 * std::abs(d) > L.n)
        throw std::invalid_argument("background_connection: |d| > n/2 breaks branch safety");
    const int n = L.n;
    const double flux = 2.0 * M_PI * d / double(n) / double(n);
    LinkField A(n, d);
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy) {
            A.angles_y[L.idx(ix, iy)] = flux * ix;
            if (ix == n - 1) A.angles_x[L.idx(ix, iy)] = -flux * n * iy;
        }
    return A;
}

CovariantDerivative covariant_derivative(const LinkField& A, const HiggsField& phi,
                                         const TorusLattice& L) {
    check_shapes(A, phi, L);
    const int n = L.n, r = phi.rank();
    const double inv_h = 1.0 / L.spacing();
    CovariantDerivative D;
    D.dx.resize(phi.values.size());
    D.dy.resize(phi.values.size());
    for (int ix = 0; ix < n; ++ix) {
        const int ixp = wrapi(ix + 1, n);
        for (int iy = 0; iy < n; ++iy) {
            const int iyp = wrapi(iy + 1, n);
            const double tx = A.angles_x[L.idx(ix, iy)];
            const double ty = A.angles_y[L.idx(ix, iy)];
            for (int j = 0; j < r; ++j) {
                const int w = phi.weights[j];
                const cplx ux = std::polar(1.0, w * tx);
                const cplx uy = std::polar(1.0, w * ty);
                const size_t here = (size_t(ix) * n + iy) * r + j;
                D.dx[here] = (ux * phi.at(ixp, iy, j) - phi.values[here]) * inv_h;
                D.dy[here] = (uy * phi.at(ix, iyp, j) - phi.values[here]) * inv_h;
            }
        }
    }
    return D;
}

std::vector<cplx> dbar(const LinkField& A, const HiggsField& phi, const TorusLattice& L) {
    const auto D = covariant_derivative(A, phi, L);
    std::vector<cplx> out(D.dx.size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = 0.5 * (D.dx[k] + cplx(0, 1) * D.dy[k]);
    return out;
}

std::vector<cplx> del(const LinkField& A, const HiggsField& phi, const TorusLattice& L) {
    const auto D = covariant_derivative(A, phi, L);
    std::vector<cplx> out(D.dx.size());
    for (size_t k = 0; k < out.size(); ++k) out[k] = 0.5 * (D.dx[k] - cplx(0, 1) * D.dy[k]);
    return out;
}

std::vector<double> moment_map_linear(const HiggsField& phi) {
    const int r = phi.rank();
    const size_t sites = phi.values.size() / (r ? r : 1);
    std::vector<double> m(sites, 0.0);
    for (size_t s = 0; s < sites; ++s) {
        double acc = 0.0;
        for (int j = 0; j < r; ++j) acc += phi.weights[j] * std::norm(phi.values[s * r + j]);
        m[s] = -0.5 * acc;
    }
    return m;
}

YmhTerms ymh_energy(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                    const TorusLattice& L) {
    check_shapes(A, phi, L);
    const double area = L.cell_area();
    YmhTerms t;
    for (double f : plaquette_curvature(A, L)) t.curvature += f * f * area;
    const auto D = covariant_derivative(A, phi, L);
    for (size_t k = 0; k < D.dx.size(); ++k)
        t.kinetic += (std::norm(D.dx[k]) + std::norm(D.dy[k])) * area;
    for (double m : moment_map_linear(phi)) t.moment += (m - c.c) * (m - c.c) * area;
    return t;
}

double norm2_dbar(const LinkField& A, const HiggsField& phi, const TorusLattice& L) {
    double s = 0.0;
    for (const cplx& v : dbar(A, phi, L)) s += std::norm(v);
    return 2.0 * s * L.cell_area();
}

double norm2_del(const LinkField& A, const HiggsField& phi, const TorusLattice& L) {
    double s = 0.0;
    for (const cplx& v : del(A, phi, L)) s += std::norm(v);
    return 2.0 * s * L.cell_area();
}

double curvature_c_pairing(const LinkField& A, const CentralParam& c, const TorusLattice& L) {
    double s = 0.0;
    for (double f : plaquette_curvature(A, L)) s += f;
    return s * L.cell_area() * c.c;
}

double curvature_moment_pairing(const LinkField& A, const HiggsField& phi,
                                const TorusLattice& L) {
    const auto f = plaquette_curvature(A, L);
    const auto m = moment_map_linear(phi);
    double s = 0.0;
    for (size_t k = 0; k < f.size(); ++k) s += f[k] * m[k];
    return s * L.cell_area();
}

double energy_identity_defect(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                              const TorusLattice& L) {
    const YmhTerms t = ymh_energy(A, phi, c, L);
    const auto f = plaquette_curvature(A, L);
    const auto m = moment_map_linear(phi);
    double eq2 = 0.0;
    for (size_t k = 0; k < f.size(); ++k) {
        const double r = f[k] + m[k] - c.c;
        eq2 += r * r;
    }
    eq2 *= L.cell_area();
    const double rhs = eq2 + 2.0 * norm2_dbar(A, phi, L) + 2.0 * curvature_c_pairing(A, c, L);
    return std::abs(t.total() - rhs);
}

double bogomolov_value(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                       const TorusLattice& L) {
    const double kaehler = 0.5 * (norm2_del(A, phi, L) - norm2_dbar(A, phi, L)) -
                           curvature_moment_pairing(A, phi, L);
    return curvature_c_pairing(A, c, L) + kaehler;
}

void apply_gauge(LinkField& A, HiggsField& phi, const std::vector<double>& g) {
    const int n = A.n;
    if (int(g.size()) != n * n) throw std::invalid_argument("apply_gauge: wrong gauge array size");
    const int r = phi.rank();
    for (int ix = 0; ix < n; ++ix) {
        const int ixp = wrapi(ix + 1, n);
        for (int iy = 0; iy < n; ++iy) {
            const int iyp = wrapi(iy + 1, n);
            const int s = ix * n + iy;
            A.angles_x[s] += g[s] - g[ixp * n + iy];
            A.angles_y[s] += g[s] - g[ix * n + iyp];
            for (int j = 0; j < r; ++j)
                phi.values[size_t(s) * r + j] *= std::polar(1.0, phi.weights[j] * g[s]);
        }
    }
}

}  // namespace vortexlab
