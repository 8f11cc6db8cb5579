#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "kex/blood.hpp"
#include "kex/config.hpp"

namespace kex {

enum class VascularStatus {
    none,
    av_fistula_failed,  // failed on all AV fistula sites
    av_graft_failed,    // failed AV graft after failing all fistula sites
};

std::string to_string(VascularStatus status);
VascularStatus parse_vascular_status(const std::string& text);

struct PatientProfile {
    std::string name;
    int age = 0;
    BloodGroup blood;
    std::vector<std::string> hla;  // length H_star, entries unique
    double kidney_size = 0.0;      // centimeters
    std::string pincode;           // 6 digits
    double pra = 0.0;              // percent, [0,100]
    std::vector<std::string> societal_pref;  // ranked acceptance; empty = indifferent
    double distance_km = 0.0;                // to the nearest dialysis center
    double economic_slab_lakhs = 0.0;        // annual income
    bool was_donor = false;
    VascularStatus vascular_status = VascularStatus::none;

    bool operator==(const PatientProfile&) const = default;
};

struct DonorProfile {
    std::string name;
    int age = 0;
    BloodGroup blood;
    std::vector<std::string> hla;
    double kidney_size = 0.0;
    std::string pincode;
    std::string societal_dist;

    bool operator==(const DonorProfile&) const = default;
};

/// One patient together with their willing donor; the unit of exchange.
struct Pair {
    std::string uid;
    PatientProfile patient;
    DonorProfile donor;
    double priority = 0.0;
    double wt_score = 0.0;
    bool is_initial = true;
    std::uint64_t enrolled_at = 0;

    bool operator==(const Pair&) const = default;
};

/// Donor with no attached patient; initiates chains when those are enabled.
struct NddDonor {
    std::string uid;
    DonorProfile donor;

    bool operator==(const NddDonor&) const = default;
};

struct Pool {
    std::vector<Pair> pairs;
    std::vector<NddDonor> ndds;

    bool operator==(const Pool&) const = default;

    /// All societal labels appearing in any preference list or donor record.
    std::set<std::string> societal_universe() const;
    std::size_t n_sd() const { return societal_universe().size(); }

    const Pair* find_pair(const std::string& uid) const;
};

struct Violation {
    std::string field;
    std::string message;

    bool operator==(const Violation&) const = default;
};

/// Empty result iff every Pair/profile invariant holds and all societal
/// labels referenced by the pair are members of `universe`.
std::vector<Violation> validate_pair(const Pair& pair, const std::set<std::string>& universe,
                                     const EngineConfig& cfg);

std::vector<Violation> validate_ndd(const NddDonor& ndd, const EngineConfig& cfg);

/// Validates the whole pool (per-pair invariants, uid uniqueness across both
/// namespaces). Throws ValidationError describing the first offender.
void validate_pool(const Pool& pool, const EngineConfig& cfg);

}  // namespace kex
