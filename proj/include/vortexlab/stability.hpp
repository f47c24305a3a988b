#pragma once

// Slope-stability certificate checking for filtrations of bundles over a
// curve, the admissible central parameter, the trivial-pair window and the
// filtration Bogomolov inequality. All arithmetic exact rational.
//
// "degree" throughout is the caller's integer; the 2*pi normalization the
// continuum theory attaches to degrees is deliberately dropped.

#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/rational.hpp>

namespace vortexlab {

using Rational = boost::rational<long long>;

struct FiltrationStep {
    int rank = 0;
    long long degree = 0;
};

struct FiltrationSpec {
    int R = 0;             // rank of V
    long long degV = 0;
    std::vector<FiltrationStep> steps;  // V_1 c ... c V_s, ranks strictly increasing
    std::vector<Rational> taus;         // tau_1..tau_s, all > 0
    Rational vol = 1;

    void validate() const;
};

struct SubsheafCandidate {
    int rank = 0;          // 0 < r' < R
    long long degree = 0;
    std::vector<int> meet_ranks;  // rk(V_k cap V') per step

    void validate(const FiltrationSpec& f) const;
};

// c = (deg V + sum tau_k rk V_k) / R
Rational admissible_c(const FiltrationSpec& f);

// tau-slope of a candidate: (deg V' + sum tau_k rk(V_k cap V')) / rk V'
Rational tau_slope(const FiltrationSpec& f, const SubsheafCandidate& cand);

struct StabilityVerdict {
    bool stable = true;
    Rational bound = 0;              // the admissible slope (RHS)
    std::optional<int> worst_index;  // maximizing candidate, if any
    Rational worst_slope = 0;
};

// Stable iff every candidate's tau-slope is strictly below admissible_c.
StabilityVerdict is_stable(const FiltrationSpec& f,
                           const std::vector<SubsheafCandidate>& candidates);

// |degE - vol*<c,i>| < vol, strict.
bool s2_pair_window(long long degE, const Rational& vol, const Rational& c_pairing);

// NOT phi_in_Fminus  OR  deg + pairing*vol > 0.
bool banfield_reduction_check(const Rational& deg_sigma_chi, const Rational& chi_c_pairing,
                              const Rational& vol, bool phi_in_Fminus);

// deg(V) * admissible_c - sum tau_k deg(V_k) - ch2_pairing  (>= 0 when the
// filtration is gauge-equivalent to a solution; caller interprets the sign).
Rational bogomolov_filtration(const FiltrationSpec& f, const Rational& ch2_pairing);

}  // namespace vortexlab
