#include "vortexlab/stability.hpp"

#include <algorithm>

namespace vortexlab {

void FiltrationSpec::validate() const {
    if (R < 1) throw std::invalid_argument("FiltrationSpec: R must be >= 1");
    if (steps.size() != taus.size())
        throw std::invalid_argument("FiltrationSpec: steps/taus size mismatch");
    int prev = 0;
    for (const auto& st : steps) {
        if (st.rank <= prev || st.rank > R)
            throw std::invalid_argument("FiltrationSpec: ranks must satisfy 0 < r_1 < ... <= R");
        prev = st.rank;
    }
    for (const auto& t : taus)
        if (!(t > 0)) throw std::invalid_argument("FiltrationSpec: taus must be positive");
    if (!(vol > 0)) throw std::invalid_argument("FiltrationSpec: vol must be positive");
}

void SubsheafCandidate::validate(const FiltrationSpec& f) const {
    if (rank <= 0 || rank >= f.R)
        throw std::invalid_argument("SubsheafCandidate: need 0 < rank < R");
    if (meet_ranks.size() != f.steps.size())
        throw std::invalid_argument("SubsheafCandidate: meet_ranks size mismatch");
    int prev = 0;
    for (size_t k = 0; k < meet_ranks.size(); ++k) {
        const int m = meet_ranks[k];
        if (m < prev || m > std::min(f.steps[k].rank, rank))
            throw std::invalid_argument("SubsheafCandidate: inconsistent meet ranks");
        prev = m;
    }
}

Rational admissible_c(const FiltrationSpec& f) {
    f.validate();
    Rational num(f.degV);
    for (size_t k = 0; k < f.steps.size(); ++k) num += f.taus[k] * f.steps[k].rank;
    return num / f.R;
}

Rational tau_slope(const FiltrationSpec& f, const SubsheafCandidate& cand) {
    cand.validate(f);
    Rational num(cand.degree);
    for (size_t k = 0; k < f.steps.size(); ++k) num += f.taus[k] * cand.meet_ranks[k];
    return num / cand.rank;
}

StabilityVerdict is_stable(const FiltrationSpec& f,
                           const std::vector<SubsheafCandidate>& candidates) {
    StabilityVerdict v;
    v.bound = admissible_c(f);
    for (size_t i = 0; i < candidates.size(); ++i) {
        const Rational s = tau_slope(f, candidates[i]);
        if (!v.worst_index || s > v.worst_slope) {
            v.worst_index = int(i);
            v.worst_slope = s;
        }
    }
    if (v.worst_index) v.stable = v.worst_slope < v.bound;
    return v;
}

bool s2_pair_window(long long degE, const Rational& vol, const Rational& c_pairing) {
    if (!(vol > 0)) throw std::invalid_argument("s2_pair_window: vol must be positive");
    Rational gap = Rational(degE) - vol * c_pairing;
    if (gap < 0) gap = -gap;
    return gap < vol;
}

bool banfield_reduction_check(const Rational& deg_sigma_chi, const Rational& chi_c_pairing,
                              const Rational& vol, bool phi_in_Fminus) {
    if (!phi_in_Fminus) return true;
    return deg_sigma_chi + chi_c_pairing * vol > 0;
}

Rational bogomolov_filtration(const FiltrationSpec& f, const Rational& ch2_pairing) {
    Rational acc = Rational(f.degV) * admissible_c(f);
    for (size_t k = 0; k < f.steps.size(); ++k) acc -= f.taus[k] * f.steps[k].degree;
    return acc - ch2_pairing;
}

}  // namespace vortexlab
