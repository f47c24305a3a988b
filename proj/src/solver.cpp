#include "vortexlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vortexlab {

namespace {
inline int wrapi(int i, int n) { return i >= n ? i - n : i; }
inline int wrapd(int i, int n) { return i < 0 ? i + n : i; }
}  // namespace

YmhGradient ymh_gradient(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                         const TorusLattice& L) {
    check_shapes(A, phi, L);
    const int n = L.n, r = phi.rank();
    const double area = L.cell_area();
    const double inv_area = 1.0 / area;

    YmhGradient g;
    g.d_angles_x.assign(L.sites(), 0.0);
    g.d_angles_y.assign(L.sites(), 0.0);
    g.d_phi.assign(phi.values.size(), cplx(0, 0));

    // wrapped plaquette angles P(s); curvature term is (1/area) sum P^2
    std::vector<double> P(L.sites());
    for (int ix = 0; ix < n; ++ix) {
        const int ixp = wrapi(ix + 1, n);
        for (int iy = 0; iy < n; ++iy) {
            const int iyp = wrapi(iy + 1, n);
            P[ix * n + iy] = wrap_angle(A.angles_x[ix * n + iy] + A.angles_y[ixp * n + iy] -
                                        A.angles_x[ix * n + iyp] - A.angles_y[ix * n + iy]);
        }
    }
    const auto m = moment_map_linear(phi);

    for (int ix = 0; ix < n; ++ix) {
        const int ixp = wrapi(ix + 1, n);
        const int ixm = wrapd(ix - 1, n);
        for (int iy = 0; iy < n; ++iy) {
            const int iyp = wrapi(iy + 1, n);
            const int iym = wrapd(iy - 1, n);
            const int s = ix * n + iy;

            g.d_angles_x[s] = 2.0 * inv_area * (P[s] - P[ix * n + iym]);
            g.d_angles_y[s] = 2.0 * inv_area * (P[ixm * n + iy] - P[s]);

            for (int j = 0; j < r; ++j) {
                const int w = phi.weights[j];
                const cplx ux = std::polar(1.0, w * A.angles_x[s]);
                const cplx uy = std::polar(1.0, w * A.angles_y[s]);
                const cplx here = phi.values[size_t(s) * r + j];
                const cplx ax = ux * phi.at(ixp, iy, j);
                const cplx ay = uy * phi.at(ix, iyp, j);

                g.d_angles_x[s] += 2.0 * w * std::imag(ax * std::conj(here));
                g.d_angles_y[s] += 2.0 * w * std::imag(ay * std::conj(here));

                // kinetic term, all four edges touching Phi_j(s)
                cplx G = -(ax - here) - (ay - here);
                const cplx uxm = std::polar(1.0, w * A.angles_x[ixm * n + iy]);
                const cplx uym = std::polar(1.0, w * A.angles_y[ix * n + iym]);
                G += std::conj(uxm) * (uxm * here - phi.at(ixm, iy, j));
                G += std::conj(uym) * (uym * here - phi.at(ix, iym, j));
                // moment term
                G -= area * (m[s] - c.c) * double(w) * here;
                g.d_phi[size_t(s) * r + j] = G;
            }
        }
    }
    return g;
}

double residual_dbar(const LinkField& A, const HiggsField& phi, const TorusLattice& L) {
    const auto db = dbar(A, phi, L);
    const int r = phi.rank();
    const size_t sites = db.size() / (r ? r : 1);
    double sup = 0.0;
    for (size_t s = 0; s < sites; ++s) {
        double acc = 0.0;
        for (int j = 0; j < r; ++j) acc += 2.0 * std::norm(db[s * r + j]);
        sup = std::max(sup, std::sqrt(acc));
    }
    return sup;
}

double residual_moment(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                       const TorusLattice& L) {
    const auto f = plaquette_curvature(A, L);
    const auto m = moment_map_linear(phi);
    double sup = 0.0;
    for (size_t k = 0; k < f.size(); ++k) sup = std::max(sup, std::abs(f[k] + m[k] - c.c));
    return sup;
}

std::pair<LinkField, HiggsField> init_fields(int d, const std::vector<int>& weights, double tau,
                                             const TorusLattice& L, std::uint64_t seed,
                                             double link_noise) {
    LinkField A = background_connection(d, L);
    HiggsField phi(L.n, weights);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-link_noise, link_noise);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < L.sites(); ++s) {
        A.angles_x[s] += uni(rng);
        A.angles_y[s] += uni(rng);
    }
    const double scale = std::sqrt(tau / 2.0);
    for (auto& v : phi.values) v = cplx(gauss(rng), gauss(rng)) * scale;
    return {std::move(A), std::move(phi)};
}

namespace {

struct State {
    LinkField A;
    HiggsField phi;
};

void axpy(State& x, double t, const YmhGradient& g) {
    for (size_t k = 0; k < x.A.angles_x.size(); ++k) {
        x.A.angles_x[k] -= t * g.d_angles_x[k];
        x.A.angles_y[k] -= t * g.d_angles_y[k];
    }
    // real gradient wrt (Re, Im) is (2Re G, 2Im G)
    for (size_t k = 0; k < x.phi.values.size(); ++k) x.phi.values[k] -= 2.0 * t * g.d_phi[k];
}

double grad_norm2(const YmhGradient& g) {
    double s = 0.0;
    for (double v : g.d_angles_x) s += v * v;
    for (double v : g.d_angles_y) s += v * v;
    for (const cplx& v : g.d_phi) s += 4.0 * std::norm(v);
    return s;
}

}  // namespace

SolveReport solve(LinkField& A, HiggsField& phi, const CentralParam& c, const TorusLattice& L,
                  const SolverConfig& cfg) {
    if (cfg.max_iters < 1 || !(cfg.tol_residual > 0.0) || !(cfg.step > 0.0))
        throw std::invalid_argument("solve: invalid SolverConfig");
    check_shapes(A, phi, L);
    if (!std::isfinite(c.c)) throw std::invalid_argument("solve: c must be finite");

    SolveReport rep;
    double energy = ymh_energy(A, phi, c, L).total();
    if (!std::isfinite(energy)) throw std::runtime_error("solve: non-finite initial energy");
    rep.energy_trace.push_back(
        {0, energy, residual_dbar(A, phi, L), residual_moment(A, phi, c, L)});

    double step = cfg.step;
    const double c_armijo = 1e-4;
    int it = 0;
    for (; it < cfg.max_iters; ++it) {
        const double r1 = residual_dbar(A, phi, L);
        const double r2 = residual_moment(A, phi, c, L);
        if (r1 < cfg.tol_residual && r2 < cfg.tol_residual) {
            rep.converged = true;
            break;
        }
        const YmhGradient g = ymh_gradient(A, phi, c, L);
        const double gn2 = grad_norm2(g);
        if (gn2 == 0.0) break;  // stationary but not within residual tolerance

        double t = step;
        double new_energy = energy;
        if (cfg.line_search == LineSearch::armijo) {
            State trial{A, phi};
            bool accepted = false;
            for (int bt = 0; bt < 60; ++bt) {
                trial.A = A;
                trial.phi = phi;
                axpy(trial, t, g);
                new_energy = ymh_energy(trial.A, trial.phi, c, L).total();
                if (!std::isfinite(new_energy)) throw std::runtime_error("solve: non-finite energy");
                if (new_energy <= energy - c_armijo * t * gn2) {
                    A = std::move(trial.A);
                    phi = std::move(trial.phi);
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
            if (!accepted) break;  // step underflow: cannot decrease further
            step = std::min(t * 2.0, cfg.step * 1e4);
        } else {
            State trial{A, phi};
            axpy(trial, t, g);
            new_energy = ymh_energy(trial.A, trial.phi, c, L).total();
            if (!std::isfinite(new_energy)) throw std::runtime_error("solve: non-finite energy");
            A = std::move(trial.A);
            phi = std::move(trial.phi);
        }
        energy = new_energy;
        if (cfg.record_every > 0 && (it + 1) % cfg.record_every == 0)
            rep.energy_trace.push_back(
                {it + 1, energy, residual_dbar(A, phi, L), residual_moment(A, phi, c, L)});
    }

    rep.iterations = it;
    rep.term_breakdown = ymh_energy(A, phi, c, L);
    rep.final_energy = rep.term_breakdown.total();
    rep.residual_eq1 = residual_dbar(A, phi, L);
    rep.residual_eq2 = residual_moment(A, phi, c, L);
    if (!rep.converged)
        rep.converged = rep.residual_eq1 < cfg.tol_residual && rep.residual_eq2 < cfg.tol_residual;
    rep.bogomolov = bogomolov_value(A, phi, c, L);
    if (rep.energy_trace.empty() || rep.energy_trace.back().iter != rep.iterations)
        rep.energy_trace.push_back(
            {rep.iterations, rep.final_energy, rep.residual_eq1, rep.residual_eq2});
    return rep;
}

int count_vortices(const HiggsField& phi) {
    const int n = phi.n, r = phi.rank();
    std::vector<double> mag(size_t(n) * n, 0.0);
    for (int s = 0; s < n * n; ++s) {
        double acc = 0.0;
        for (int j = 0; j < r; ++j) acc += std::norm(phi.values[size_t(s) * r + j]);
        mag[s] = std::sqrt(acc);
    }
    std::vector<double> sorted = mag;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double thresh = 0.1 * median;

    std::vector<int> label(size_t(n) * n, 0);  // 0 = not low, -1 = low unvisited
    for (int s = 0; s < n * n; ++s)
        if (mag[s] < thresh) label[s] = -1;
    int clusters = 0;
    std::vector<int> stack;
    for (int s0 = 0; s0 < n * n; ++s0) {
        if (label[s0] != -1) continue;
        ++clusters;
        label[s0] = clusters;
        stack.push_back(s0);
        while (!stack.empty()) {
            const int s = stack.back();
            stack.pop_back();
            const int ix = s / n, iy = s % n;
            const int nb[4] = {wrapi(ix + 1, n) * n + iy, wrapd(ix - 1, n) * n + iy,
                               ix * n + wrapi(iy + 1, n), ix * n + wrapd(iy - 1, n)};
            for (int t : nb)
                if (label[t] == -1) {
                    label[t] = clusters;
                    stack.push_back(t);
                }
        }
    }
    return clusters;
}

double integrated_obstruction(const LinkField& A, const HiggsField& phi, const CentralParam& c,
                              const TorusLattice& L) {
    const auto m = moment_map_linear(phi);
    double mean_m = 0.0;
    for (double v : m) mean_m += v;
    mean_m /= m.size();
    return total_curvature(A, L) / L.volume() + mean_m - c.c;
}

}  // namespace vortexlab
