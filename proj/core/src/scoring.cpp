#include "kex/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "kex/errors.hpp"

namespace kex {

double abo_score(BloodGroup donor, BloodGroup patient, const EngineConfig& cfg) {
    return abo_compatible(donor, patient) ? cfg.V_b : 0.0;
}

double age_score(double donor_age, double patient_age, const EngineConfig& cfg) {
    const double diff = donor_age - patient_age;
    if (diff < 0.0) {
        return cfg.V_a;
    }
    if (diff <= cfg.D_a) {
        return cfg.V_a - cfg.alpha_a * diff;
    }
    return 0.0;
}

double hla_score(std::span<const std::string> donor_hla, std::span<const std::string> patient_hla,
                 const EngineConfig& cfg) {
    std::set<std::string_view> donor_set(donor_hla.begin(), donor_hla.end());
    int matches = 0;
    std::set<std::string_view> counted;
    for (const std::string& antigen : patient_hla) {
        if (donor_set.count(antigen) && counted.insert(antigen).second) {
            ++matches;
        }
    }
    if (matches >= cfg.H_min) {
        return static_cast<double>(matches);
    }
    return 0.0;
}

double kidney_score(double donor_cm, double patient_cm, const EngineConfig& cfg) {
    const double diff = std::abs(donor_cm - patient_cm);
    if (diff <= cfg.D_k) {
        return cfg.V_k - diff;
    }
    return 0.0;
}

namespace {

void require_pincode(std::string_view pin) {
    if (pin.size() != 6 ||
        !std::all_of(pin.begin(), pin.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw ValidationError("malformed pincode '" + std::string(pin) + "'");
    }
}

}  // namespace

double pin_score(std::string_view donor_pin, std::string_view patient_pin,
                 const EngineConfig& cfg) {
    require_pincode(donor_pin);
    require_pincode(patient_pin);
    if (donor_pin == patient_pin) {
        return cfg.V_p;
    }
    if (donor_pin.substr(0, 3) == patient_pin.substr(0, 3)) {
        return cfg.V_p - cfg.D_p;
    }
    if (donor_pin.substr(0, 2) == patient_pin.substr(0, 2)) {
        return cfg.V_p - cfg.alpha_p1 * cfg.D_p;
    }
    if (donor_pin.substr(0, 1) == patient_pin.substr(0, 1)) {
        return cfg.V_p - cfg.alpha_p2 * cfg.D_p;
    }
    return 0.0;
}

double societal_acceptance_score(std::string_view donor_sd,
                                 std::span<const std::string> patient_pref, double k_star) {
    if (patient_pref.empty()) {
        return 1.0;
    }
    for (std::size_t i = 0; i < patient_pref.size(); ++i) {
        if (patient_pref[i] == donor_sd) {
            return 1.0 / static_cast<double>(i + 1);
        }
    }
    return 1.0 / k_star;
}

EdgeScoreBreakdown edge_score(const DonorProfile& donor, const PatientProfile& patient,
                              const EngineConfig& cfg, double k_star) {
    EdgeScoreBreakdown b;
    b.abo = abo_score(donor.blood, patient.blood, cfg);
    if (b.abo == 0.0) {
        return EdgeScoreBreakdown{};
    }
    b.hla = hla_score(donor.hla, patient.hla, cfg);
    if (b.hla == 0.0) {
        return EdgeScoreBreakdown{};
    }
    b.age = age_score(donor.age, patient.age, cfg);
    b.kidney = kidney_score(donor.kidney_size, patient.kidney_size, cfg);
    b.pin = pin_score(donor.pincode, patient.pincode, cfg);
    b.general = b.abo + b.hla + b.age + b.kidney + b.pin;
    b.sas = societal_acceptance_score(donor.societal_dist, patient.societal_pref, k_star);
    b.final = b.general * b.sas;
    return b;
}

WeightMatrix gen_compatibility_matrix(const Pool& pool, const EngineConfig& cfg) {
    const double k_star = cfg.effective_k_star(pool.n_sd());
    const int pair_count = static_cast<int>(pool.pairs.size());
    const int n = pair_count + (cfg.chains_enabled ? static_cast<int>(pool.ndds.size()) : 0);

    std::vector<std::string> uids;
    uids.reserve(n);
    std::vector<const DonorProfile*> donors;
    donors.reserve(n);
    std::vector<const PatientProfile*> patients;
    patients.reserve(n);
    for (const Pair& p : pool.pairs) {
        uids.push_back(p.uid);
        donors.push_back(&p.donor);
        patients.push_back(&p.patient);
    }
    if (cfg.chains_enabled) {
        for (const NddDonor& ndd : pool.ndds) {
            uids.push_back(ndd.uid);
            donors.push_back(&ndd.donor);
            patients.push_back(nullptr);
        }
    }

    std::vector<EdgeScoreBreakdown> cells(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (patients[j] == nullptr) {
                continue;  // NDD vertices have no patient; their column stays zero
            }
            cells[static_cast<std::size_t>(i) * n + j] =
                edge_score(*donors[i], *patients[j], cfg, k_star);
        }
    }
    return WeightMatrix(n, pair_count, k_star, std::move(uids), std::move(cells));
}

}  // namespace kex
