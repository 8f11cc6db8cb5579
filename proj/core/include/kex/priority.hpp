#pragma once

#include <vector>

#include "kex/config.hpp"
#include "kex/registry.hpp"

namespace kex {

/// The seven priority factors plus the waiting-time score.
/// total is their plain sum; every component is non-negative.
struct PriorityBreakdown {
    double pra = 0.0;
    double pair_type = 0.0;
    double age = 0.0;
    double va = 0.0;
    double ipd = 0.0;
    double dist = 0.0;
    double eco = 0.0;
    double wt = 0.0;
    double total = 0.0;

    bool operator==(const PriorityBreakdown&) const = default;
};

/// Zero at or below D_pra, then (pra - D_pra) * alpha_pra.
double pra_priority(double pra, const EngineConfig& cfg);

/// V_pt for the hard-to-match patient-donor ABO types
/// (O-A, O-B, O-AB, A-AB, B-AB), RH ignored; zero otherwise.
double pair_type_priority(BloodGroup patient, BloodGroup donor, const EngineConfig& cfg);

/// Children first: with groups [<6, <12, <18], the g-th group scores
/// V_ap - alpha_ap * (g - 1); adults score zero.
double age_priority(double patient_age, const EngineConfig& cfg);

double vascular_priority(VascularStatus status, const EngineConfig& cfg);

double ipd_priority(bool was_donor, const EngineConfig& cfg);

/// Remote patients first: [>=50 km, >10 km] score V_d and V_d - alpha_d;
/// within 10 km scores zero.
double distance_priority(double distance_km, const EngineConfig& cfg);

/// Income slabs [<1, <5, <10, >=10] lakhs score V_eco down to
/// V_eco - 3 * alpha_eco.
double economic_priority(double income_lakhs, const EngineConfig& cfg);

/// Factor scores for one pair using its current wt_score. Pure.
PriorityBreakdown priority_breakdown(const Pair& pair, const EngineConfig& cfg);

/// Start-of-run priority assignment. Fresh pairs get wt_score 0 and lose
/// their is_initial mark; carried-over pairs gain V_wt. Each pair's priority
/// becomes the sum of the seven factors plus wt_score. Returns the
/// breakdowns in pool order.
std::vector<PriorityBreakdown> calculate_priorities(Pool& pool, const EngineConfig& cfg);

}  // namespace kex
