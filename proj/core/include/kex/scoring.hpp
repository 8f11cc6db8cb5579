#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kex/config.hpp"
#include "kex/registry.hpp"

namespace kex {

/// Per-edge component scores. When the blood groups are incompatible or the
/// HLA overlap is below H_min every field is zero; otherwise
/// general = abo + hla + age + kidney + pin and final = general * sas.
struct EdgeScoreBreakdown {
    double abo = 0.0;
    double hla = 0.0;
    double age = 0.0;
    double kidney = 0.0;
    double pin = 0.0;
    double general = 0.0;
    double sas = 0.0;
    double final = 0.0;

    bool operator==(const EdgeScoreBreakdown&) const = default;
};

double abo_score(BloodGroup donor, BloodGroup patient, const EngineConfig& cfg);

/// V_a when the donor is younger than the patient, V_a - alpha_a * diff up to
/// D_a years of difference, zero beyond.
double age_score(double donor_age, double patient_age, const EngineConfig& cfg);

/// Cardinality of the antigen overlap (as sets); zero when below H_min.
double hla_score(std::span<const std::string> donor_hla, std::span<const std::string> patient_hla,
                 const EngineConfig& cfg);

/// V_k minus the absolute size difference, zero beyond D_k centimeters.
double kidney_score(double donor_cm, double patient_cm, const EngineConfig& cfg);

/// Logistical proximity from shared pincode prefixes. Zone is the first
/// digit, subzone the first two, city the first three. Throws on codes that
/// are not exactly six digits.
double pin_score(std::string_view donor_pin, std::string_view patient_pin,
                 const EngineConfig& cfg);

/// 1 for an empty preference list, 1/k for the 1-based rank k of the donor's
/// label, 1/k_star for labels not on the list. Always in (0, 1].
double societal_acceptance_score(std::string_view donor_sd,
                                 std::span<const std::string> patient_pref, double k_star);

EdgeScoreBreakdown edge_score(const DonorProfile& donor, const PatientProfile& patient,
                              const EngineConfig& cfg, double k_star);

/// Vertex-indexed final weights, donor side first: cell (i, j) scores the
/// donor of vertex i against the patient of vertex j. Pairs come first; when
/// chains are enabled NDD donors follow as donor-only vertices whose patient
/// column stays zero.
class WeightMatrix {
public:
    WeightMatrix() = default;
    WeightMatrix(int n, int pair_count, double k_star, std::vector<std::string> uids,
                 std::vector<EdgeScoreBreakdown> cells)
        : n_(n), pair_count_(pair_count), k_star_(k_star), uids_(std::move(uids)),
          cells_(std::move(cells)) {}

    int size() const { return n_; }
    int pair_count() const { return pair_count_; }
    double k_star() const { return k_star_; }
    const std::vector<std::string>& uids() const { return uids_; }
    bool is_ndd_vertex(int i) const { return i >= pair_count_; }

    const EdgeScoreBreakdown& cell(int donor, int patient) const {
        return cells_[static_cast<std::size_t>(donor) * n_ + patient];
    }
    double final_weight(int donor, int patient) const { return cell(donor, patient).final; }

private:
    int n_ = 0;
    int pair_count_ = 0;
    double k_star_ = 0.0;
    std::vector<std::string> uids_;
    std::vector<EdgeScoreBreakdown> cells_;
};

/// Scores every donor vertex against every patient vertex, diagonal included.
WeightMatrix gen_compatibility_matrix(const Pool& pool, const EngineConfig& cfg);

}  // namespace kex
