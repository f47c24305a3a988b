#include "vortexlab/serialize.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vortexlab/eqindex.hpp"
#include "vortexlab/s2.hpp"
#include "vortexlab/stability.hpp"
#include "vortexlab/weights.hpp"

using nlohmann::json;

namespace vortexlab {

const char* tool_version() { return "0.1.0"; }

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field: ") + key);
    return *it;
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    auto it = j.find(key);
    return it == j.end() ? fallback : it->get<T>();
}

Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            bad("cannot parse rational: " + s);
        }
    }
    if (j.is_number_float()) {
        // continued-fraction rationalization; exact for the usual small values
        double x = j.get<double>();
        long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        double v = x;
        for (int it = 0; it < 40; ++it) {
            const long long a = (long long)std::floor(v);
            const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            if (std::abs(x - double(p1) / double(q1)) < 1e-12 * std::max(1.0, std::abs(x))) break;
            const double frac = v - a;
            if (frac < 1e-15) break;
            v = 1.0 / frac;
        }
        return Rational(p1, q1);
    }
    bad("expected integer, \"p/q\" string, or number for a rational value");
}

json rational_to_json(const Rational& r) {
    if (r.denominator() == 1) return json(r.numerator());
    std::ostringstream os;
    os << r.numerator() << "/" << r.denominator();
    return json(os.str());
}

cplxw parse_complex(const json& j) {
    if (j.is_number()) return cplxw(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return cplxw(j[0].get<double>(), j[1].get<double>());
    bad("expected number or [re, im] pair");
}

CRat parse_crat(const json& j) {
    if (j.is_array() && j.size() == 2) return {parse_rational(j[0]), parse_rational(j[1])};
    return {parse_rational(j), Rational(0)};
}

CRatMatrix parse_crat_matrix(const json& j) {
    CRatMatrix m;
    for (const auto& col : j) {
        std::vector<CRat> c;
        for (const auto& e : col) c.push_back(parse_crat(e));
        m.push_back(std::move(c));
    }
    return m;
}

}  // namespace

json fields_to_json(const TorusLattice& L, const LinkField& A, const HiggsField& phi) {
    json j;
    j["n"] = L.n;
    j["side_length"] = L.side_length;
    j["degree"] = A.degree;
    j["angles_x"] = A.angles_x;
    j["angles_y"] = A.angles_y;
    j["weights"] = phi.weights;
    std::vector<double> re(phi.values.size()), im(phi.values.size());
    for (size_t k = 0; k < phi.values.size(); ++k) {
        re[k] = phi.values[k].real();
        im[k] = phi.values[k].imag();
    }
    j["values_re"] = re;
    j["values_im"] = im;
    return j;
}

FieldSnapshot fields_from_json(const json& j) {
    FieldSnapshot s;
    s.lattice = TorusLattice(need(j, "n").get<int>(), get_or(j, "side_length", 1.0));
    s.link = LinkField(s.lattice.n, get_or(j, "degree", 0));
    s.link.angles_x = need(j, "angles_x").get<std::vector<double>>();
    s.link.angles_y = need(j, "angles_y").get<std::vector<double>>();
    s.higgs = HiggsField(s.lattice.n, need(j, "weights").get<std::vector<int>>());
    const auto re = need(j, "values_re").get<std::vector<double>>();
    const auto im = need(j, "values_im").get<std::vector<double>>();
    if (re.size() != s.higgs.values.size() || im.size() != s.higgs.values.size())
        bad("values_re/values_im size mismatch");
    for (size_t k = 0; k < re.size(); ++k) s.higgs.values[k] = cplx(re[k], im[k]);
    check_shapes(s.link, s.higgs, s.lattice);
    for (const cplx& v : s.higgs.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            bad("HiggsField entries must be finite");
    return s;
}

SolverConfig solver_config_from_json(const json& j) {
    SolverConfig cfg;
    cfg.max_iters = get_or(j, "max_iters", cfg.max_iters);
    cfg.step = get_or(j, "step", cfg.step);
    cfg.tol_residual = get_or(j, "tol_residual", cfg.tol_residual);
    cfg.seed = get_or<std::uint64_t>(j, "seed", cfg.seed);
    cfg.record_every = get_or(j, "record_every", cfg.record_every);
    const std::string ls = get_or<std::string>(j, "line_search", "armijo");
    if (ls == "armijo") cfg.line_search = LineSearch::armijo;
    else if (ls == "fixed") cfg.line_search = LineSearch::fixed;
    else bad("line_search must be \"armijo\" or \"fixed\"");
    if (cfg.max_iters < 1) bad("max_iters must be >= 1");
    if (!(cfg.tol_residual > 0)) bad("tol_residual must be > 0");
    return cfg;
}

json report_to_json(const SolveReport& rep) {
    json j;
    j["iterations"] = rep.iterations;
    j["final_energy"] = rep.final_energy;
    j["term_breakdown"] = {rep.term_breakdown.curvature, rep.term_breakdown.kinetic,
                           rep.term_breakdown.moment};
    j["residual_eq1"] = rep.residual_eq1;
    j["residual_eq2"] = rep.residual_eq2;
    j["converged"] = rep.converged;
    j["bogomolov"] = rep.bogomolov;
    json trace = json::array();
    for (const auto& t : rep.energy_trace) trace.push_back({t.iter, t.energy});
    j["energy_trace"] = trace;
    return j;
}

namespace {

SplitBundle split_from_counts(const WeightData& w) {
    SplitBundle b;
    b.group = w.group;
    b.m = w.m;
    b.l = w.l;
    const long long lp = w.group == GroupKind::cyclic ? w.l : 1;
    std::vector<long long> ap, am;
    for (int i = 0; i < w.Pp; ++i) ap.push_back(lp);
    for (int i = 0; i < w.Zp; ++i) ap.push_back(0);
    for (int i = 0; i < w.Np; ++i) ap.push_back(-lp);
    for (int i = 0; i < w.Pm; ++i) am.push_back(lp);
    for (int i = 0; i < w.Zm; ++i) am.push_back(0);
    for (int i = 0; i < w.Nm; ++i) am.push_back(-lp);
    for (int i = 0; i < w.rank; ++i) b.summands.push_back({ap[i] - am[i], ap[i], am[i]});
    if (w.group == GroupKind::cyclic) {
        long long diff = w.deg - b.deg();
        if (diff % w.m != 0)
            throw std::domain_error("inconsistent weight data: degree does not match weights mod m");
        b.summands[0].lambda += diff;
    }
    return b;
}

WeightData weight_data_from_json(const json& in, GroupKind kind) {
    const int rank = need(in, "rank").get<int>();
    const long long deg = need(in, "deg").get<long long>();
    const int Pp = get_or(in, "Pp", 0), Zp = get_or(in, "Zp", 0), Np = get_or(in, "Np", 0);
    const int Pm = get_or(in, "Pm", 0), Zm = get_or(in, "Zm", 0), Nm = get_or(in, "Nm", 0);
    if (kind == GroupKind::circle) return WeightData::circle(rank, deg, Pp, Zp, Np, Pm, Zm, Nm);
    return WeightData::cyclic(need(in, "m").get<int>(), need(in, "l").get<int>(), rank, deg, Pp,
                              Zp, Np, Pm, Zm, Nm);
}

}  // namespace

json run_index(const json& in) {
    const std::string group = get_or<std::string>(in, "group", "circle");
    if (group != "circle" && group != "cyclic") bad("group must be \"circle\" or \"cyclic\"");
    const GroupKind kind = group == "circle" ? GroupKind::circle : GroupKind::cyclic;

    SplitBundle b;
    WeightData w;
    if (in.contains("summands")) {
        b.group = kind;
        if (kind == GroupKind::cyclic) {
            b.m = need(in, "m").get<int>();
            b.l = need(in, "l").get<int>();
        }
        for (const auto& s : need(in, "summands"))
            b.summands.push_back({s.at(0).get<long long>(), s.at(1).get<long long>(),
                                  s.at(2).get<long long>()});
        b.validate();
        w = b.to_weight_data();
    } else {
        w = weight_data_from_json(in, kind);
        b = split_from_counts(w);
    }
    const long long closed = kind == GroupKind::circle ? index_s1(w) : index_cyclic(w);
    const long long oracle = index_oracle(b);
    json out;
    out["index"] = closed;
    out["oracle"] = oracle;
    out["agree"] = closed == oracle;
    out["rank"] = w.rank;
    out["deg"] = w.deg;
    return out;
}

json run_weights(const json& in) {
    const std::string mode = need(in, "mode").get<std::string>();
    json out;

    auto parse_point = [&](PointMode m) {
        WeightedPoint p;
        p.mode = m;
        for (const auto& c : need(in, "coords")) p.coords.push_back(parse_complex(c));
        for (const auto& wj : need(in, "weights")) p.weights.push_back(parse_rational(wj));
        if (p.coords.size() != p.weights.size()) bad("coords/weights length mismatch");
        return p;
    };

    if (mode == "linear") {
        const MaxWeight mw = max_weight_linear(parse_point(PointMode::linear));
        out["value"] = mw.infinite ? json("infinity") : rational_to_json(mw.value);
    } else if (mode == "projective") {
        const WeightedPoint p = parse_point(PointMode::projective);
        const MaxWeight mw = max_weight_projective(p);
        out["value"] = rational_to_json(mw.value);
        if (in.contains("t")) out["lambda_t"] = lambda_t_projective(p, in["t"].get<double>());
        if (get_or(in, "curve", false)) {
            json curve = json::array();
            for (int i = 0; i <= 100; ++i) {
                const double t = -5.0 + 0.1 * i;
                curve.push_back({t, lambda_t_projective(p, t)});
            }
            out["lambda_t_curve"] = curve;
        }
    } else if (mode == "psi") {
        const WeightedPoint p = parse_point(PointMode::projective);
        const PsiValue v = psi_projective(p, get_or(in, "s_scale", 1.0));
        out["closed_form"] = v.closed_form;
        out["quadrature"] = v.quadrature;
    } else if (mode == "kempf_ness") {
        const WeightedPoint p = parse_point(PointMode::projective);
        const KempfNessResult r = kempf_ness_find_zero(p, need(in, "c_offset").get<double>());
        out["stable"] = r.stable;
        if (r.stable) {
            out["t_star"] = r.t_star;
            out["moment_value"] = r.moment_value;
            out["iterations"] = r.iterations;
            json pt = json::array();
            for (const auto& z : r.point) pt.push_back({z.real(), z.imag()});
            out["point"] = pt;
        }
    } else if (mode == "grassmann") {
        GrassData g;
        g.ambient_dim = need(in, "ambient_dim").get<int>();
        g.plane = parse_crat_matrix(need(in, "plane"));
        for (const auto& fl : need(in, "eigen_flags")) {
            GrassData::Flag flag;
            flag.eigenvalue = parse_rational(need(fl, "eigenvalue"));
            flag.subspace = parse_crat_matrix(need(fl, "subspace"));
            g.eigen_flags.push_back(std::move(flag));
        }
        g.tau = parse_rational(get_or(in, "tau", json(1)));
        out["value"] = rational_to_json(max_weight_grassmann(g));
    } else if (mode == "s2") {
        const cplxw x = parse_complex(need(in, "x"));
        const cplxw y = parse_complex(need(in, "y"));
        const std::string dir = need(in, "direction").get<std::string>();
        if (dir != "+i" && dir != "-i") bad("direction must be \"+i\" or \"-i\"");
        out["value"] =
            max_weight_s2(x, y, dir == "+i" ? S2Direction::plus_i : S2Direction::minus_i);
    } else {
        bad("unknown weights mode: " + mode);
    }
    return out;
}

namespace {

FiltrationSpec filtration_from_json(const json& in) {
    FiltrationSpec f;
    f.R = need(in, "R").get<int>();
    f.degV = need(in, "degV").get<long long>();
    for (const auto& st : need(in, "steps"))
        f.steps.push_back({st.at(0).get<int>(), st.at(1).get<long long>()});
    for (const auto& t : need(in, "taus")) f.taus.push_back(parse_rational(t));
    f.vol = parse_rational(get_or(in, "vol", json(1)));
    f.validate();
    return f;
}

}  // namespace

json run_stability(const json& in) {
    const std::string mode = get_or<std::string>(in, "mode", "filtration");
    json out;
    if (mode == "filtration") {
        const FiltrationSpec f = filtration_from_json(in);
        std::vector<SubsheafCandidate> cands;
        for (const auto& c : get_or(in, "candidates", json::array())) {
            SubsheafCandidate sc;
            sc.rank = need(c, "rank").get<int>();
            sc.degree = need(c, "degree").get<long long>();
            sc.meet_ranks = need(c, "meet_ranks").get<std::vector<int>>();
            sc.validate(f);
            cands.push_back(std::move(sc));
        }
        const StabilityVerdict v = is_stable(f, cands);
        out["admissible_c"] = rational_to_json(v.bound);
        out["stable"] = v.stable;
        if (v.worst_index) {
            out["worst_candidate"] = *v.worst_index;
            out["worst_slope"] = rational_to_json(v.worst_slope);
        }
    } else if (mode == "window") {
        out["inside"] = s2_pair_window(need(in, "degE").get<long long>(),
                                       parse_rational(get_or(in, "vol", json(1))),
                                       parse_rational(need(in, "c")));
    } else if (mode == "banfield") {
        out["satisfied"] = banfield_reduction_check(
            parse_rational(need(in, "deg_sigma_chi")), parse_rational(need(in, "chi_c_pairing")),
            parse_rational(get_or(in, "vol", json(1))), need(in, "phi_in_Fminus").get<bool>());
    } else if (mode == "bogomolov") {
        const FiltrationSpec f = filtration_from_json(in);
        out["value"] =
            rational_to_json(bogomolov_filtration(f, parse_rational(get_or(in, "ch2", json(0)))));
    } else {
        bad("unknown stability mode: " + mode);
    }
    return out;
}

json run_example_s2(const json& in) {
    ClassB B{need(in, "p").get<int>(), need(in, "q").get<int>()};
    json out;
    out["dimension"] = moduli_dimension(B);
    out["invariant"] = invariant_phibar(B);
    // window table for the associated bundle degree d = p - q at vol 1:
    // inside iff |d - c| < 1, sampled at the boundary and the midpoint
    const long long d = B.p - B.q;
    json window = json::array();
    for (const Rational& c : {Rational(d - 1), Rational(2 * d - 1, 2), Rational(d),
                              Rational(2 * d + 1, 2), Rational(d + 1)}) {
        window.push_back(
            {{"c", rational_to_json(c)}, {"inside", s2_pair_window(d, Rational(1), c)}});
    }
    out["window_examples"] = window;
    if (in.contains("f") && in.contains("g"))
        out["divisors_coprime"] = divisor_pair_check(in["f"].get<std::vector<long long>>(),
                                                     in["g"].get<std::vector<long long>>());
    return out;
}

json run_solve(const json& in, std::string* csv_trace) {
    const SolverConfig cfg = solver_config_from_json(get_or(in, "config", json::object()));
    const CentralParam c{need(in, "c").get<double>(), get_or(in, "tau", 1.0)};

    TorusLattice L;
    LinkField A;
    HiggsField phi;
    if (in.contains("fields")) {
        FieldSnapshot s = fields_from_json(in["fields"]);
        L = s.lattice;
        A = std::move(s.link);
        phi = std::move(s.higgs);
    } else if (in.contains("init")) {
        const json& ini = in["init"];
        L = TorusLattice(need(ini, "n").get<int>(), get_or(ini, "side_length", 1.0));
        auto fields = init_fields(need(ini, "degree").get<int>(),
                                  need(ini, "weights").get<std::vector<int>>(),
                                  get_or(ini, "tau", 1.0), L, cfg.seed,
                                  get_or(ini, "link_noise", 0.05));
        A = std::move(fields.first);
        phi = std::move(fields.second);
    } else {
        bad("solve needs either \"fields\" or \"init\"");
    }

    const SolveReport rep = solve(A, phi, c, L, cfg);
    json out = report_to_json(rep);
    out["vortex_count"] = count_vortices(phi);
    out["integrated_obstruction"] = integrated_obstruction(A, phi, c, L);
    if (get_or(in, "emit_fields", false)) out["final_fields"] = fields_to_json(L, A, phi);
    if (csv_trace) {
        std::ostringstream os;
        os << "iter,energy,residual_eq1,residual_eq2\n";
        for (const auto& t : rep.energy_trace)
            os << t.iter << "," << json(t.energy).dump() << "," << json(t.residual_eq1).dump()
               << "," << json(t.residual_eq2).dump() << "\n";
        *csv_trace = os.str();
    }
    return out;
}

std::string config_hash(const json& j) {
    const std::string s = j.dump();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json make_manifest(const std::string& subcommand, const json& input, std::uint64_t seed,
                   const std::vector<std::string>& outputs) {
    json m;
    m["subcommand"] = subcommand;
    m["config_hash"] = config_hash(input);
    m["seed"] = seed;
    m["tool_version"] = tool_version();
    m["outputs"] = outputs;
    return m;
}

}  // namespace vortexlab
