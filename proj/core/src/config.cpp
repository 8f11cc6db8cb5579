#include "kex/config.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "kex/errors.hpp"
#include "text_util.hpp"

namespace kex {

using detail::format_double;
using detail::join;
using detail::parse_bool;
using detail::parse_double;
using detail::parse_int;
using detail::split;
using detail::split_list;
using detail::trim;

double EngineConfig::effective_k_star(std::size_t n_sd) const {
    if (k_star.has_value()) {
        return *k_star;
    }
    return static_cast<double>(n_sd) + 1.0;
}

void EngineConfig::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw ValidationError(std::string("config: ") + name + " must be > 0");
        }
    };
    if (!(alpha_a > 0.0 && alpha_a < 1.0)) {
        throw ValidationError("config: alpha_a must lie in (0,1)");
    }
    if (!(alpha_pra >= 0.0 && alpha_pra <= 1.0)) {
        throw ValidationError("config: alpha_pra must lie in [0,1]");
    }
    if (L_max < 1) {
        throw ValidationError("config: L_max must be >= 1");
    }
    if (H_star < 1) {
        throw ValidationError("config: H_star must be >= 1");
    }
    if (H_min < 1) {
        throw ValidationError("config: H_min must be >= 1");
    }
    if (F_star < 0.0) {
        throw ValidationError("config: F_star must be >= 0");
    }
    positive(V_a, "V_a");
    positive(V_b, "V_b");
    positive(V_k, "V_k");
    positive(V_p, "V_p");
    positive(V_pt, "V_pt");
    positive(V_ap, "V_ap");
    positive(V_wt, "V_wt");
    positive(V_vap, "V_vap");
    positive(V_vap1, "V_vap1");
    positive(V_ipd, "V_ipd");
    positive(V_d, "V_d");
    positive(V_eco, "V_eco");
    if (k_star.has_value() && !(*k_star > 0.0)) {
        throw ValidationError("config: k_star must be > 0");
    }
    if (age_groups.empty() || dist_bounds.size() != 2 || eco_bounds.size() != 3) {
        throw ValidationError("config: malformed group boundary lists");
    }
}

namespace {

std::vector<double> parse_double_list(const std::string& value, const std::string& key) {
    std::vector<double> out;
    for (const std::string& item : split_list(value)) {
        out.push_back(parse_double(item, "config key " + key));
    }
    return out;
}

std::string format_double_list(const std::vector<double>& values) {
    std::vector<std::string> parts;
    parts.reserve(values.size());
    for (double v : values) {
        parts.push_back(format_double(v));
    }
    return join(parts, ';');
}

}  // namespace

std::string to_string(TiebreakMode mode) {
    return mode == TiebreakMode::priority ? "priority" : "lexicographic";
}

TiebreakMode parse_tiebreak_mode(const std::string& text) {
    if (text == "priority") return TiebreakMode::priority;
    if (text == "lexicographic") return TiebreakMode::lexicographic;
    throw ValidationError("unknown tiebreak mode '" + text + "'");
}

EngineConfig parse_config_text(const std::string& text) {
    EngineConfig cfg;
    std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters;
    auto dbl = [&](const char* key, double& field) {
        setters[key] = [&field](const std::string& k, const std::string& v) {
            field = parse_double(v, "config key " + k);
        };
    };
    auto integer = [&](const char* key, int& field) {
        setters[key] = [&field](const std::string& k, const std::string& v) {
            field = static_cast<int>(parse_int(v, "config key " + k));
        };
    };
    auto dbl_list = [&](const char* key, std::vector<double>& field) {
        setters[key] = [&field](const std::string& k, const std::string& v) {
            field = parse_double_list(v, k);
        };
    };
    dbl("V_a", cfg.V_a);
    dbl("alpha_a", cfg.alpha_a);
    dbl("D_a", cfg.D_a);
    dbl("V_b", cfg.V_b);
    integer("H_star", cfg.H_star);
    integer("H_min", cfg.H_min);
    dbl("V_k", cfg.V_k);
    dbl("D_k", cfg.D_k);
    dbl("V_p", cfg.V_p);
    dbl("D_p", cfg.D_p);
    dbl("alpha_p1", cfg.alpha_p1);
    dbl("alpha_p2", cfg.alpha_p2);
    dbl("F_star", cfg.F_star);
    integer("L_max", cfg.L_max);
    setters["k_star"] = [&cfg](const std::string& k, const std::string& v) {
        cfg.k_star = parse_double(v, "config key " + k);
    };
    dbl("D_pra", cfg.D_pra);
    dbl("alpha_pra", cfg.alpha_pra);
    dbl("V_pt", cfg.V_pt);
    dbl("V_ap", cfg.V_ap);
    dbl("alpha_ap", cfg.alpha_ap);
    dbl_list("age_groups", cfg.age_groups);
    dbl("V_wt", cfg.V_wt);
    dbl("V_vap", cfg.V_vap);
    dbl("V_vap1", cfg.V_vap1);
    dbl("V_ipd", cfg.V_ipd);
    dbl("V_d", cfg.V_d);
    dbl("alpha_d", cfg.alpha_d);
    dbl_list("dist_bounds", cfg.dist_bounds);
    dbl("V_eco", cfg.V_eco);
    dbl("alpha_eco", cfg.alpha_eco);
    dbl_list("eco_bounds", cfg.eco_bounds);
    setters["tiebreak_mode"] = [&cfg](const std::string&, const std::string& v) {
        cfg.tiebreak_mode = parse_tiebreak_mode(std::string(trim(v)));
    };
    setters["chains_enabled"] = [&cfg](const std::string& k, const std::string& v) {
        cfg.chains_enabled = parse_bool(v, "config key " + k);
    };

    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') {
            continue;
        }
        auto eq = sv.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
        }
        std::string key(trim(sv.substr(0, eq)));
        std::string value(trim(sv.substr(eq + 1)));
        auto it = setters.find(key);
        if (it == setters.end()) {
            throw ValidationError("config line " + std::to_string(lineno) + ": unknown key '" +
                                  key + "'");
        }
        if (!seen.insert(key).second) {
            throw ValidationError("config line " + std::to_string(lineno) + ": duplicate key '" +
                                  key + "'");
        }
        it->second(key, value);
    }
    cfg.validate();
    return cfg;
}

EngineConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string serialize_config(const EngineConfig& cfg) {
    std::ostringstream out;
    out << "V_a = " << format_double(cfg.V_a) << "\n";
    out << "alpha_a = " << format_double(cfg.alpha_a) << "\n";
    out << "D_a = " << format_double(cfg.D_a) << "\n";
    out << "V_b = " << format_double(cfg.V_b) << "\n";
    out << "H_star = " << cfg.H_star << "\n";
    out << "H_min = " << cfg.H_min << "\n";
    out << "V_k = " << format_double(cfg.V_k) << "\n";
    out << "D_k = " << format_double(cfg.D_k) << "\n";
    out << "V_p = " << format_double(cfg.V_p) << "\n";
    out << "D_p = " << format_double(cfg.D_p) << "\n";
    out << "alpha_p1 = " << format_double(cfg.alpha_p1) << "\n";
    out << "alpha_p2 = " << format_double(cfg.alpha_p2) << "\n";
    out << "F_star = " << format_double(cfg.F_star) << "\n";
    out << "L_max = " << cfg.L_max << "\n";
    if (cfg.k_star.has_value()) {
        out << "k_star = " << format_double(*cfg.k_star) << "\n";
    }
    out << "D_pra = " << format_double(cfg.D_pra) << "\n";
    out << "alpha_pra = " << format_double(cfg.alpha_pra) << "\n";
    out << "V_pt = " << format_double(cfg.V_pt) << "\n";
    out << "V_ap = " << format_double(cfg.V_ap) << "\n";
    out << "alpha_ap = " << format_double(cfg.alpha_ap) << "\n";
    out << "age_groups = " << format_double_list(cfg.age_groups) << "\n";
    out << "V_wt = " << format_double(cfg.V_wt) << "\n";
    out << "V_vap = " << format_double(cfg.V_vap) << "\n";
    out << "V_vap1 = " << format_double(cfg.V_vap1) << "\n";
    out << "V_ipd = " << format_double(cfg.V_ipd) << "\n";
    out << "V_d = " << format_double(cfg.V_d) << "\n";
    out << "alpha_d = " << format_double(cfg.alpha_d) << "\n";
    out << "dist_bounds = " << format_double_list(cfg.dist_bounds) << "\n";
    out << "V_eco = " << format_double(cfg.V_eco) << "\n";
    out << "alpha_eco = " << format_double(cfg.alpha_eco) << "\n";
    out << "eco_bounds = " << format_double_list(cfg.eco_bounds) << "\n";
    out << "tiebreak_mode = " << to_string(cfg.tiebreak_mode) << "\n";
    out << "chains_enabled = " << (cfg.chains_enabled ? "true" : "false") << "\n";
    return out.str();
}

std::string config_hash(const EngineConfig& cfg) {
    const std::string canon = serialize_config(cfg);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xF];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

}  // namespace kex
