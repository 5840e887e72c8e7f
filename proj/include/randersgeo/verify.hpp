#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "randersgeo/mean_curvature.hpp"

namespace randers {

enum class WindKind { Killing, NonKilling, Zero };

/// One randomized configuration: an analytic Randers space (metric + wind
/// with analytic derivatives) and an analytic graph immersion through it.
/// Killing winds are Euclidean isometry generators pulled back through a
/// polynomial diffeomorphism, so the Killing identity holds to roundoff.
struct VerifyCase {
    uint64_t seed = 0;
    int n = 0, p = 0;
    MeasureKind measure_kind = MeasureKind::BH;
    WindKind wind_kind = WindKind::Killing;
    NavigationData nav;
    ImmersionHandle handle;
    Vec x0;
};

VerifyCase make_random_case(uint64_t seed, int n, int p, MeasureKind mk, WindKind wk);

struct ClassStat {
    double worst = 0;
    int count = 0;
    double tol = 0;
    bool pass() const { return count > 0 && worst < tol; }
};

struct CaseRecord {
    int id = 0;
    uint64_t seed = 0;
    int n = 0, p = 0;
    std::string measure;
    bool killing = false;
    std::vector<std::pair<std::string, double>> residuals;
    bool pass = true;
};

struct SweepReport {
    std::vector<CaseRecord> cases;
    std::map<std::string, ClassStat> classes;
    double wall_ms = 0;
    bool all_pass = true;

    void record(CaseRecord rec);
};

struct VerifyOptions {
    int cases = 200;
    uint64_t seed = 7;
    std::string measure = "both";  // bh | ht | both
    std::string codim = "both";    // 1 | 2 | both
    double tol_oracle = 1e-5;
    double tol_mean_vs_killing = 1e-10;
    double tol_thm_hypersurface = 1e-8;
    double tol_bh_specialization = 1e-12;
    double tol_lemma = 1e-8;
    int chain_cases = 100;
    int lemma_cases = 200;
};

/// Closed form (general) vs finite-difference variational oracle over
/// randomized cases spanning measures x {n} x {p} x {Killing, non-Killing}.
SweepReport run_oracle_sweep(const VerifyOptions& opts);

/// Specialization chain: general vs Killing form; Killing form contracted
/// vs the hypersurface scalar theorem; the scalar theorem vs its BH corollary.
SweepReport run_specialization_chain(const VerifyOptions& opts);

/// The seven hypersurface contraction identities behind the scalar theorem,
/// on random 3- and 4-dimensional ambients with Killing wind.
SweepReport run_lemma_suite(const VerifyOptions& opts);

/// Riemannian reduction: W~ = 0 implies H_f(X) + nH <N, X> = 0.
SweepReport run_riemannian_reduction(const VerifyOptions& opts);

/// Relative deviation used by all sweeps: |a-b|_inf / max(1, |a|_inf, |b|_inf).
double rel_dev(const Vec& a, const Vec& b);
double rel_dev(double a, double b);

}  // namespace randers
