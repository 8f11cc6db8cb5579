#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kex {

enum class TiebreakMode { priority, lexicographic };

/// Every tunable constant of the engine, with the standard defaults.
///
/// The identical defaults for V_a, V_b, V_k, H_star and V_p keep the five
/// edge-score components on the same scale; raise one to make it dominate.
struct EngineConfig {
    // Age score: V_a when the donor is younger, linear falloff alpha_a per
    // year of (donor - patient) difference, zero past D_a years.
    double V_a = 6.0;
    double alpha_a = 0.15;
    double D_a = 40.0;

    // ABO score: flat V_b when blood groups are compatible.
    double V_b = 6.0;

    // HLA score: antigen list length recorded per person (H_star) and the
    // minimum number of matches for a viable graft (H_min).
    int H_star = 6;
    int H_min = 1;

    // Kidney size score: V_k minus the absolute size difference, zero past D_k cm.
    double V_k = 6.0;
    double D_k = 3.0;

    // Pincode score: V_p for equal codes, then V_p - D_p (same city, first 3
    // digits), V_p - alpha_p1*D_p (same subzone, 2 digits), V_p - alpha_p2*D_p
    // (same zone, 1 digit), else zero.
    double V_p = 6.0;
    double D_p = 1.0;
    double alpha_p1 = 2.0;
    double alpha_p2 = 3.0;

    // Successor edges must weigh strictly more than F_star.
    double F_star = 0.0;

    // Maximum number of pairs in an executable cycle or chain.
    int L_max = 3;

    // Divisor for donors outside a patient's acceptance list. Unset means
    // n_sd + 1, computed from the pool's label universe.
    std::optional<double> k_star;

    // Priority factors.
    double D_pra = 20.0;
    double alpha_pra = 0.05;
    double V_pt = 1.0;
    double V_ap = 3.0;
    double alpha_ap = 1.0;
    std::vector<double> age_groups = {6.0, 12.0, 18.0};
    double V_wt = 1.0;
    double V_vap = 6.0;   // failed AV graft after all fistula sites
    double V_vap1 = 2.0;  // failed all AV fistula sites
    double V_ipd = 5.0;
    double V_d = 3.0;
    double alpha_d = 1.0;
    std::vector<double> dist_bounds = {50.0, 10.0};  // [>=50, >10 and <50] km
    double V_eco = 4.0;
    double alpha_eco = 1.0;
    std::vector<double> eco_bounds = {1.0, 5.0, 10.0};  // lakhs per year

    TiebreakMode tiebreak_mode = TiebreakMode::priority;
    bool chains_enabled = false;

    /// Effective k_star for a pool with n_sd distinct societal labels.
    double effective_k_star(std::size_t n_sd) const;

    /// Throws ValidationError when any invariant is broken
    /// (alpha_a in (0,1), alpha_pra in [0,1], L_max >= 1, all V_* > 0, ...).
    void validate() const;
};

/// Parses a flat key-value config file ("V_a = 6", lists semicolon-joined).
/// Missing keys keep their defaults; unknown or duplicate keys are errors.
EngineConfig parse_config_text(const std::string& text);
EngineConfig load_config_file(const std::string& path);

/// Canonical key=value serialization; parse_config_text round-trips it.
std::string serialize_config(const EngineConfig& cfg);

/// FNV-1a hash of the canonical serialization, as a hex string.
std::string config_hash(const EngineConfig& cfg);

std::string to_string(TiebreakMode mode);
TiebreakMode parse_tiebreak_mode(const std::string& text);

}  // namespace kex
