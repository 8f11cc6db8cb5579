#include "kex/priority.hpp"

namespace kex {

double pra_priority(double pra, const EngineConfig& cfg) {
    if (pra <= cfg.D_pra) {
        return 0.0;
    }
    return (pra - cfg.D_pra) * cfg.alpha_pra;
}

double pair_type_priority(BloodGroup patient, BloodGroup donor, const EngineConfig& cfg) {
    const Abo p = patient.abo;
    const Abo d = donor.abo;
    const bool listed = (p == Abo::O && (d == Abo::A || d == Abo::B || d == Abo::AB)) ||
                        (p == Abo::A && d == Abo::AB) || (p == Abo::B && d == Abo::AB);
    return listed ? cfg.V_pt : 0.0;
}

namespace {

// 1-based index of the first group whose upper bound exceeds the value, or 0.
// Bounds are half-open, closed on the needier side.
int group_index_below(double value, const std::vector<double>& upper_bounds) {
    for (std::size_t i = 0; i < upper_bounds.size(); ++i) {
        if (value < upper_bounds[i]) {
            return static_cast<int>(i) + 1;
        }
    }
    return 0;
}

}  // namespace

double age_priority(double patient_age, const EngineConfig& cfg) {
    const int group = group_index_below(patient_age, cfg.age_groups);
    if (group == 0) {
        return 0.0;
    }
    return cfg.V_ap - cfg.alpha_ap * (group - 1);
}

double vascular_priority(VascularStatus status, const EngineConfig& cfg) {
    switch (status) {
        case VascularStatus::av_graft_failed: return cfg.V_vap;
        case VascularStatus::av_fistula_failed: return cfg.V_vap1;
        case VascularStatus::none: break;
    }
    return 0.0;
}

double ipd_priority(bool was_donor, const EngineConfig& cfg) {
    return was_donor ? cfg.V_ipd : 0.0;
}

double distance_priority(double distance_km, const EngineConfig& cfg) {
    // dist_bounds = [far, near]: index 1 at >= far, index 2 above near.
    if (distance_km >= cfg.dist_bounds[0]) {
        return cfg.V_d;
    }
    if (distance_km > cfg.dist_bounds[1]) {
        return cfg.V_d - cfg.alpha_d;
    }
    return 0.0;
}

double economic_priority(double income_lakhs, const EngineConfig& cfg) {
    int slab = group_index_below(income_lakhs, cfg.eco_bounds);
    if (slab == 0) {
        slab = static_cast<int>(cfg.eco_bounds.size()) + 1;  // top slab, >= last bound
    }
    return cfg.V_eco - cfg.alpha_eco * (slab - 1);
}

PriorityBreakdown priority_breakdown(const Pair& pair, const EngineConfig& cfg) {
    PriorityBreakdown b;
    b.pra = pra_priority(pair.patient.pra, cfg);
    b.pair_type = pair_type_priority(pair.patient.blood, pair.donor.blood, cfg);
    b.age = age_priority(pair.patient.age, cfg);
    b.va = vascular_priority(pair.patient.vascular_status, cfg);
    b.ipd = ipd_priority(pair.patient.was_donor, cfg);
    b.dist = distance_priority(pair.patient.distance_km, cfg);
    b.eco = economic_priority(pair.patient.economic_slab_lakhs, cfg);
    b.wt = pair.wt_score;
    b.total = b.pra + b.pair_type + b.age + b.va + b.ipd + b.dist + b.eco + b.wt;
    return b;
}

std::vector<PriorityBreakdown> calculate_priorities(Pool& pool, const EngineConfig& cfg) {
    std::vector<PriorityBreakdown> out;
    out.reserve(pool.pairs.size());
    for (Pair& pair : pool.pairs) {
        if (pair.is_initial) {
            pair.wt_score = 0.0;
            pair.is_initial = false;
        } else {
            pair.wt_score += cfg.V_wt;
        }
        PriorityBreakdown b = priority_breakdown(pair, cfg);
        pair.priority = b.total;
        out.push_back(b);
    }
    return out;
}

}  // namespace kex
