#pragma once

#include <string>
#include <string_view>

namespace kex {

enum class Abo { A, B, AB, O };
enum class Rh { positive, negative };

struct BloodGroup {
    Abo abo = Abo::O;
    Rh rh = Rh::positive;

    bool operator==(const BloodGroup&) const = default;
};

/// Parses exactly the eight strings A+, A-, B+, B-, AB+, AB-, O+, O-.
/// Throws ValidationError for anything else.
BloodGroup parse_blood_group(std::string_view text);

std::string to_string(BloodGroup bg);
std::string to_string(Abo abo);

/// ABO donation rule (O -> anyone, A -> A/AB, B -> B/AB, AB -> AB) combined
/// with the RH rule: a negative donor may give to any recipient, a positive
/// donor only to positive recipients.
bool abo_compatible(BloodGroup donor, BloodGroup patient);

}  // namespace kex
