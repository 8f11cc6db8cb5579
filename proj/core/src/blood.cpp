#include "kex/blood.hpp"

#include "kex/errors.hpp"

namespace kex {

BloodGroup parse_blood_group(std::string_view text) {
    if (text.size() < 2 || text.size() > 3) {
        throw ValidationError("unknown blood group '" + std::string(text) + "'");
    }
    const char sign = text.back();
    const std::string_view abo = text.substr(0, text.size() - 1);
    BloodGroup bg;
    if (abo == "A") {
        bg.abo = Abo::A;
    } else if (abo == "B") {
        bg.abo = Abo::B;
    } else if (abo == "AB") {
        bg.abo = Abo::AB;
    } else if (abo == "O") {
        bg.abo = Abo::O;
    } else {
        throw ValidationError("unknown blood group '" + std::string(text) + "'");
    }
    if (sign == '+') {
        bg.rh = Rh::positive;
    } else if (sign == '-') {
        bg.rh = Rh::negative;
    } else {
        throw ValidationError("unknown blood group '" + std::string(text) + "'");
    }
    return bg;
}

std::string to_string(Abo abo) {
    switch (abo) {
        case Abo::A: return "A";
        case Abo::B: return "B";
        case Abo::AB: return "AB";
        case Abo::O: return "O";
    }
    return "?";
}

std::string to_string(BloodGroup bg) {
    return to_string(bg.abo) + (bg.rh == Rh::positive ? "+" : "-");
}

bool abo_compatible(BloodGroup donor, BloodGroup patient) {
    bool abo_ok = false;
    switch (donor.abo) {
        case Abo::O: abo_ok = true; break;
        case Abo::A: abo_ok = patient.abo == Abo::A || patient.abo == Abo::AB; break;
        case Abo::B: abo_ok = patient.abo == Abo::B || patient.abo == Abo::AB; break;
        case Abo::AB: abo_ok = patient.abo == Abo::AB; break;
    }
    if (!abo_ok) {
        return false;
    }
    if (donor.rh == Rh::positive && patient.rh == Rh::negative) {
        return false;
    }
    return true;
}

}  // namespace kex
