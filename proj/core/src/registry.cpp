#include "kex/registry.hpp"

#include <algorithm>
#include <cctype>

#include "kex/errors.hpp"

namespace kex {

std::string to_string(VascularStatus status) {
    switch (status) {
        case VascularStatus::none: return "none";
        case VascularStatus::av_fistula_failed: return "av_fistula_failed";
        case VascularStatus::av_graft_failed: return "av_graft_failed";
    }
    return "none";
}

VascularStatus parse_vascular_status(const std::string& text) {
    if (text.empty() || text == "none") return VascularStatus::none;
    if (text == "av_fistula_failed") return VascularStatus::av_fistula_failed;
    if (text == "av_graft_failed") return VascularStatus::av_graft_failed;
    throw ValidationError("unknown vascular status '" + text + "'");
}

std::set<std::string> Pool::societal_universe() const {
    std::set<std::string> labels;
    for (const Pair& p : pairs) {
        labels.insert(p.patient.societal_pref.begin(), p.patient.societal_pref.end());
        if (!p.donor.societal_dist.empty()) {
            labels.insert(p.donor.societal_dist);
        }
    }
    for (const NddDonor& n : ndds) {
        if (!n.donor.societal_dist.empty()) {
            labels.insert(n.donor.societal_dist);
        }
    }
    return labels;
}

const Pair* Pool::find_pair(const std::string& uid) const {
    for (const Pair& p : pairs) {
        if (p.uid == uid) return &p;
    }
    return nullptr;
}

namespace {

bool valid_pincode(const std::string& pin) {
    if (pin.size() != 6) return false;
    return std::all_of(pin.begin(), pin.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool entries_unique(const std::vector<std::string>& items) {
    std::set<std::string> seen(items.begin(), items.end());
    return seen.size() == items.size();
}

void check_donor(const DonorProfile& d, const std::string& prefix, const EngineConfig& cfg,
                 std::vector<Violation>& out) {
    if (d.age < 0) {
        out.push_back({prefix + "age", "age must be >= 0"});
    }
    if (static_cast<int>(d.hla.size()) != cfg.H_star) {
        out.push_back({prefix + "hla", "expected " + std::to_string(cfg.H_star) +
                                           " antigen codes, got " + std::to_string(d.hla.size())});
    }
    if (!entries_unique(d.hla)) {
        out.push_back({prefix + "hla", "antigen codes must be unique"});
    }
    if (!(d.kidney_size > 0.0)) {
        out.push_back({prefix + "kidney_size", "kidney size must be positive"});
    }
    if (!valid_pincode(d.pincode)) {
        out.push_back({prefix + "pincode", "pincode must be exactly 6 digits"});
    }
}

}  // namespace

std::vector<Violation> validate_pair(const Pair& pair, const std::set<std::string>& universe,
                                     const EngineConfig& cfg) {
    std::vector<Violation> out;
    const PatientProfile& p = pair.patient;
    if (p.age < 0) {
        out.push_back({"patient_age", "age must be >= 0"});
    }
    if (static_cast<int>(p.hla.size()) != cfg.H_star) {
        out.push_back({"patient_hla", "expected " + std::to_string(cfg.H_star) +
                                          " antigen codes, got " + std::to_string(p.hla.size())});
    }
    if (!entries_unique(p.hla)) {
        out.push_back({"patient_hla", "antigen codes must be unique"});
    }
    if (!(p.kidney_size > 0.0)) {
        out.push_back({"patient_kidney_size", "kidney size must be positive"});
    }
    if (!valid_pincode(p.pincode)) {
        out.push_back({"patient_pincode", "pincode must be exactly 6 digits"});
    }
    if (p.pra < 0.0 || p.pra > 100.0) {
        out.push_back({"patient_pra", "PRA must lie in [0,100]"});
    }
    if (!entries_unique(p.societal_pref)) {
        out.push_back({"patient_societal_pref", "preference labels must be unique"});
    }
    for (const std::string& label : p.societal_pref) {
        if (!universe.count(label)) {
            out.push_back({"patient_societal_pref", "unknown societal label '" + label + "'"});
        }
    }
    if (p.distance_km < 0.0) {
        out.push_back({"patient_distance_km", "distance must be >= 0"});
    }
    if (p.economic_slab_lakhs < 0.0) {
        out.push_back({"patient_economic_slab_lakhs", "income must be >= 0"});
    }
    check_donor(pair.donor, "donor_", cfg, out);
    if (pair.priority < 0.0) {
        out.push_back({"priority", "priority must be >= 0"});
    }
    if (pair.wt_score < 0.0) {
        out.push_back({"wt_score", "waiting-time score must be >= 0"});
    }
    if (pair.is_initial && pair.wt_score != 0.0) {
        out.push_back({"wt_score", "a pair marked initial must carry wt_score 0"});
    }
    return out;
}

std::vector<Violation> validate_ndd(const NddDonor& ndd, const EngineConfig& cfg) {
    std::vector<Violation> out;
    check_donor(ndd.donor, "donor_", cfg, out);
    return out;
}

void validate_pool(const Pool& pool, const EngineConfig& cfg) {
    std::set<std::string> uids;
    for (const Pair& p : pool.pairs) {
        if (!uids.insert(p.uid).second) {
            throw ValidationError("duplicate uid '" + p.uid + "'");
        }
    }
    for (const NddDonor& n : pool.ndds) {
        if (!uids.insert(n.uid).second) {
            throw ValidationError("duplicate uid '" + n.uid + "' (pair and NDD uids share one namespace)");
        }
    }
    const std::set<std::string> universe = pool.societal_universe();
    for (const Pair& p : pool.pairs) {
        auto violations = validate_pair(p, universe, cfg);
        if (!violations.empty()) {
            throw ValidationError("pair '" + p.uid + "', field " + violations.front().field +
                                  ": " + violations.front().message);
        }
    }
    for (const NddDonor& n : pool.ndds) {
        auto violations = validate_ndd(n, cfg);
        if (!violations.empty()) {
            throw ValidationError("ndd '" + n.uid + "', field " + violations.front().field + ": " +
                                  violations.front().message);
        }
    }
}

}  // namespace kex
