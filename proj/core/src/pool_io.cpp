#include "kex/pool_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

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

using json = nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

const std::vector<std::string> kColumns = {
    "uid",
    "ndd",
    "patient_name",
    "patient_blood",
    "patient_hla",
    "patient_age",
    "patient_kidney_size",
    "patient_pincode",
    "patient_pra",
    "patient_societal_pref",
    "patient_distance_km",
    "patient_economic_slab_lakhs",
    "patient_was_donor",
    "patient_vascular_status",
    "donor_name",
    "donor_blood",
    "donor_hla",
    "donor_age",
    "donor_kidney_size",
    "donor_pincode",
    "donor_societal_dist",
    "priority",
    "wt_score",
    "is_initial",
    "enrolled_at",
};

struct RowContext {
    int row;
    std::string current_field;

    std::string at(const std::string& field) const {
        return "row " + std::to_string(row) + ", field " + field;
    }
};

DonorProfile donor_from_fields(const std::map<std::string, std::string>& f, const RowContext& ctx) {
    DonorProfile d;
    auto get = [&](const char* key) -> std::string {
        auto it = f.find(key);
        return it == f.end() ? std::string() : it->second;
    };
    d.name = get("donor_name");
    try {
        d.blood = parse_blood_group(get("donor_blood"));
    } catch (const ValidationError& e) {
        throw ValidationError(ctx.at("donor_blood") + ": " + e.what());
    }
    d.hla = split_list(get("donor_hla"));
    d.age = static_cast<int>(parse_int(get("donor_age"), ctx.at("donor_age")));
    d.kidney_size = parse_double(get("donor_kidney_size"), ctx.at("donor_kidney_size"));
    d.pincode = std::string(trim(get("donor_pincode")));
    d.societal_dist = std::string(trim(get("donor_societal_dist")));
    return d;
}

PatientProfile patient_from_fields(const std::map<std::string, std::string>& f,
                                   const RowContext& ctx) {
    PatientProfile p;
    auto get = [&](const char* key) -> std::string {
        auto it = f.find(key);
        return it == f.end() ? std::string() : it->second;
    };
    auto get_or = [&](const char* key, const char* dflt) -> std::string {
        auto it = f.find(key);
        if (it == f.end() || trim(it->second).empty()) return dflt;
        return it->second;
    };
    p.name = get("patient_name");
    try {
        p.blood = parse_blood_group(get("patient_blood"));
    } catch (const ValidationError& e) {
        throw ValidationError(ctx.at("patient_blood") + ": " + e.what());
    }
    p.hla = split_list(get("patient_hla"));
    p.age = static_cast<int>(parse_int(get("patient_age"), ctx.at("patient_age")));
    p.kidney_size = parse_double(get("patient_kidney_size"), ctx.at("patient_kidney_size"));
    p.pincode = std::string(trim(get("patient_pincode")));
    p.pra = parse_double(get_or("patient_pra", "0"), ctx.at("patient_pra"));
    p.societal_pref = split_list(get("patient_societal_pref"));
    p.distance_km = parse_double(get_or("patient_distance_km", "0"), ctx.at("patient_distance_km"));
    p.economic_slab_lakhs =
        parse_double(get_or("patient_economic_slab_lakhs", "0"), ctx.at("patient_economic_slab_lakhs"));
    p.was_donor = parse_bool(get("patient_was_donor"), ctx.at("patient_was_donor"));
    try {
        p.vascular_status = parse_vascular_status(std::string(trim(get("patient_vascular_status"))));
    } catch (const ValidationError& e) {
        throw ValidationError(ctx.at("patient_vascular_status") + ": " + e.what());
    }
    return p;
}

void check_record(const Pair& pair, const RowContext& ctx, const EngineConfig& cfg) {
    // The pool-wide label universe is not known yet; membership is checked in
    // validate_pool afterwards.
    auto violations = validate_pair(pair, std::set<std::string>(pair.patient.societal_pref.begin(),
                                                                pair.patient.societal_pref.end()),
                                    cfg);
    if (!violations.empty()) {
        throw ValidationError(ctx.at(violations.front().field) + ": " +
                              violations.front().message);
    }
}

Pool parse_pool_tabular(const std::string& text, const EngineConfig& cfg) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    Pool pool;
    std::uint64_t next_enrolled = 0;
    bool any_explicit_enrolled = false;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') {
            continue;
        }
        std::vector<std::string> cells = split(sv, ',');
        if (header.empty()) {
            header = cells;
            for (const std::string& col : header) {
                bool known = false;
                for (const std::string& c : kColumns) {
                    if (c == col) { known = true; break; }
                }
                if (!known) {
                    throw ValidationError("row " + std::to_string(row) + ": unknown column '" +
                                          col + "'");
                }
            }
            continue;
        }
        if (cells.size() != header.size()) {
            throw ValidationError("row " + std::to_string(row) + ": expected " +
                                  std::to_string(header.size()) + " cells, got " +
                                  std::to_string(cells.size()));
        }
        std::map<std::string, std::string> f;
        for (std::size_t i = 0; i < header.size(); ++i) {
            f[header[i]] = cells[i];
        }
        RowContext ctx{row, ""};
        const std::string uid(trim(f["uid"]));
        if (uid.empty()) {
            throw ValidationError(ctx.at("uid") + ": uid must not be empty");
        }
        const bool is_ndd = parse_bool(f["ndd"], ctx.at("ndd"));
        if (is_ndd) {
            for (const auto& [key, value] : f) {
                if (key.rfind("patient_", 0) == 0 && !trim(value).empty()) {
                    throw ValidationError(ctx.at(key) + ": ndd records carry donor fields only");
                }
            }
            NddDonor ndd;
            ndd.uid = uid;
            ndd.donor = donor_from_fields(f, ctx);
            auto violations = validate_ndd(ndd, cfg);
            if (!violations.empty()) {
                throw ValidationError(ctx.at(violations.front().field) + ": " +
                                      violations.front().message);
            }
            pool.ndds.push_back(std::move(ndd));
            continue;
        }
        Pair pair;
        pair.uid = uid;
        pair.patient = patient_from_fields(f, ctx);
        pair.donor = donor_from_fields(f, ctx);
        if (!trim(f["priority"]).empty()) {
            pair.priority = parse_double(f["priority"], ctx.at("priority"));
        }
        if (!trim(f["wt_score"]).empty()) {
            pair.wt_score = parse_double(f["wt_score"], ctx.at("wt_score"));
        }
        pair.is_initial = trim(f["is_initial"]).empty()
                              ? true
                              : parse_bool(f["is_initial"], ctx.at("is_initial"));
        if (!trim(f["enrolled_at"]).empty()) {
            pair.enrolled_at =
                static_cast<std::uint64_t>(parse_int(f["enrolled_at"], ctx.at("enrolled_at")));
            any_explicit_enrolled = true;
        } else {
            pair.enrolled_at = next_enrolled;
        }
        ++next_enrolled;
        check_record(pair, ctx, cfg);
        pool.pairs.push_back(std::move(pair));
    }
    if (any_explicit_enrolled) {
        for (std::size_t i = 1; i < pool.pairs.size(); ++i) {
            if (pool.pairs[i].enrolled_at <= pool.pairs[i - 1].enrolled_at) {
                throw ValidationError("pair '" + pool.pairs[i].uid +
                                      "': enrolled_at must be strictly increasing in file order");
            }
        }
    }
    return pool;
}

json require(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) {
        throw ValidationError(where + ": missing field '" + key + "'");
    }
    return obj.at(key);
}

std::vector<std::string> string_list(const json& arr, const std::string& where) {
    if (!arr.is_array()) {
        throw ValidationError(where + ": expected a list");
    }
    std::vector<std::string> out;
    for (const auto& item : arr) {
        out.push_back(item.get<std::string>());
    }
    return out;
}

DonorProfile donor_from_json(const json& obj, const std::string& where) {
    DonorProfile d;
    d.name = obj.value("name", "");
    d.blood = parse_blood_group(require(obj, "blood", where).get<std::string>());
    d.hla = string_list(require(obj, "hla", where), where + ".hla");
    d.age = require(obj, "age", where).get<int>();
    d.kidney_size = require(obj, "kidney_size", where).get<double>();
    d.pincode = require(obj, "pincode", where).get<std::string>();
    d.societal_dist = obj.value("societal_dist", "");
    return d;
}

PatientProfile patient_from_json(const json& obj, const std::string& where) {
    PatientProfile p;
    p.name = obj.value("name", "");
    p.blood = parse_blood_group(require(obj, "blood", where).get<std::string>());
    p.hla = string_list(require(obj, "hla", where), where + ".hla");
    p.age = require(obj, "age", where).get<int>();
    p.kidney_size = require(obj, "kidney_size", where).get<double>();
    p.pincode = require(obj, "pincode", where).get<std::string>();
    p.pra = obj.value("pra", 0.0);
    if (obj.contains("societal_pref")) {
        p.societal_pref = string_list(obj.at("societal_pref"), where + ".societal_pref");
    }
    p.distance_km = obj.value("distance_km", 0.0);
    p.economic_slab_lakhs = obj.value("economic_slab_lakhs", 0.0);
    p.was_donor = obj.value("was_donor", false);
    p.vascular_status = parse_vascular_status(obj.value("vascular_status", "none"));
    return p;
}

Pair pair_from_json(const json& obj, std::uint64_t default_enrolled, const EngineConfig& cfg) {
    Pair pair;
    pair.uid = require(obj, "uid", "pair record").get<std::string>();
    const std::string where = "pair '" + pair.uid + "'";
    pair.patient = patient_from_json(require(obj, "patient", where), where + ".patient");
    pair.donor = donor_from_json(require(obj, "donor", where), where + ".donor");
    pair.priority = obj.value("priority", 0.0);
    pair.wt_score = obj.value("wt_score", 0.0);
    pair.is_initial = obj.value("is_initial", true);
    pair.enrolled_at = obj.value("enrolled_at", default_enrolled);
    RowContext ctx{static_cast<int>(default_enrolled) + 1, ""};
    auto violations = validate_pair(pair, std::set<std::string>(pair.patient.societal_pref.begin(),
                                                                pair.patient.societal_pref.end()),
                                    cfg);
    if (!violations.empty()) {
        throw ValidationError(where + ", field " + violations.front().field + ": " +
                              violations.front().message);
    }
    return pair;
}

Pool parse_pool_object(const std::string& text, const EngineConfig& cfg) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("pool document: ") + e.what());
    }
    Pool pool;
    std::uint64_t enrolled = 0;
    if (doc.contains("pairs")) {
        for (const auto& rec : doc.at("pairs")) {
            pool.pairs.push_back(pair_from_json(rec, enrolled, cfg));
            ++enrolled;
        }
    }
    if (doc.contains("ndds")) {
        for (const auto& rec : doc.at("ndds")) {
            NddDonor ndd;
            ndd.uid = require(rec, "uid", "ndd record").get<std::string>();
            const std::string where = "ndd '" + ndd.uid + "'";
            ndd.donor = donor_from_json(require(rec, "donor", where), where + ".donor");
            auto violations = validate_ndd(ndd, cfg);
            if (!violations.empty()) {
                throw ValidationError(where + ", field " + violations.front().field + ": " +
                                      violations.front().message);
            }
            pool.ndds.push_back(std::move(ndd));
        }
    }
    for (std::size_t i = 1; i < pool.pairs.size(); ++i) {
        if (pool.pairs[i].enrolled_at <= pool.pairs[i - 1].enrolled_at) {
            throw ValidationError("pair '" + pool.pairs[i].uid +
                                  "': enrolled_at must be strictly increasing in file order");
        }
    }
    return pool;
}

json donor_to_json(const DonorProfile& d) {
    json obj;
    obj["name"] = d.name;
    obj["blood"] = to_string(d.blood);
    obj["hla"] = d.hla;
    obj["age"] = d.age;
    obj["kidney_size"] = d.kidney_size;
    obj["pincode"] = d.pincode;
    obj["societal_dist"] = d.societal_dist;
    return obj;
}

json patient_to_json(const PatientProfile& p) {
    json obj;
    obj["name"] = p.name;
    obj["blood"] = to_string(p.blood);
    obj["hla"] = p.hla;
    obj["age"] = p.age;
    obj["kidney_size"] = p.kidney_size;
    obj["pincode"] = p.pincode;
    obj["pra"] = p.pra;
    obj["societal_pref"] = p.societal_pref;
    obj["distance_km"] = p.distance_km;
    obj["economic_slab_lakhs"] = p.economic_slab_lakhs;
    obj["was_donor"] = p.was_donor;
    obj["vascular_status"] = to_string(p.vascular_status);
    return obj;
}

}  // namespace

Pool parse_pool(const std::string& text, const EngineConfig& cfg) {
    std::string_view sv = trim(text);
    Pool pool = (!sv.empty() && sv.front() == '{') ? parse_pool_object(text, cfg)
                                                   : parse_pool_tabular(text, cfg);
    validate_pool(pool, cfg);
    return pool;
}

Pool load_pool_file(const std::string& path, const EngineConfig& cfg) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open pool file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pool(buf.str(), cfg);
}

std::string serialize_pool(const Pool& pool, PoolEncoding encoding) {
    if (encoding == PoolEncoding::object) {
        json doc;
        doc["format_version"] = kFormatVersion;
        doc["pairs"] = json::array();
        for (const Pair& p : pool.pairs) {
            json rec;
            rec["uid"] = p.uid;
            rec["patient"] = patient_to_json(p.patient);
            rec["donor"] = donor_to_json(p.donor);
            rec["priority"] = p.priority;
            rec["wt_score"] = p.wt_score;
            rec["is_initial"] = p.is_initial;
            rec["enrolled_at"] = p.enrolled_at;
            doc["pairs"].push_back(rec);
        }
        doc["ndds"] = json::array();
        for (const NddDonor& n : pool.ndds) {
            json rec;
            rec["uid"] = n.uid;
            rec["donor"] = donor_to_json(n.donor);
            doc["ndds"].push_back(rec);
        }
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# format-version " << kFormatVersion << "\n";
    out << join(kColumns, ',') << "\n";
    auto donor_cells = [](const DonorProfile& d) {
        std::vector<std::string> cells;
        cells.push_back(d.name);
        cells.push_back(to_string(d.blood));
        cells.push_back(join(d.hla, ';'));
        cells.push_back(std::to_string(d.age));
        cells.push_back(format_double(d.kidney_size));
        cells.push_back(d.pincode);
        cells.push_back(d.societal_dist);
        return cells;
    };
    for (const Pair& p : pool.pairs) {
        std::vector<std::string> cells;
        cells.push_back(p.uid);
        cells.push_back("false");
        cells.push_back(p.patient.name);
        cells.push_back(to_string(p.patient.blood));
        cells.push_back(join(p.patient.hla, ';'));
        cells.push_back(std::to_string(p.patient.age));
        cells.push_back(format_double(p.patient.kidney_size));
        cells.push_back(p.patient.pincode);
        cells.push_back(format_double(p.patient.pra));
        cells.push_back(join(p.patient.societal_pref, ';'));
        cells.push_back(format_double(p.patient.distance_km));
        cells.push_back(format_double(p.patient.economic_slab_lakhs));
        cells.push_back(p.patient.was_donor ? "true" : "false");
        cells.push_back(to_string(p.patient.vascular_status));
        auto donor = donor_cells(p.donor);
        cells.insert(cells.end(), donor.begin(), donor.end());
        cells.push_back(format_double(p.priority));
        cells.push_back(format_double(p.wt_score));
        cells.push_back(p.is_initial ? "true" : "false");
        cells.push_back(std::to_string(p.enrolled_at));
        out << join(cells, ',') << "\n";
    }
    for (const NddDonor& n : pool.ndds) {
        std::vector<std::string> cells;
        cells.push_back(n.uid);
        cells.push_back("true");
        for (int i = 0; i < 12; ++i) cells.push_back("");
        auto donor = donor_cells(n.donor);
        cells.insert(cells.end(), donor.begin(), donor.end());
        cells.push_back("");
        cells.push_back("");
        cells.push_back("");
        cells.push_back("");
        out << join(cells, ',') << "\n";
    }
    return out.str();
}

void write_pool_file(const Pool& pool, const std::string& path, PoolEncoding encoding) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write pool file '" + path + "'");
    }
    out << serialize_pool(pool, encoding);
}

Pair parse_pair_object(const std::string& json_text, const EngineConfig& cfg) {
    json obj;
    try {
        obj = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("pair record: ") + e.what());
    }
    return pair_from_json(obj, 0, cfg);
}

}  // namespace kex
