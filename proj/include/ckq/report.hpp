#pragma once

// Report documents and their table/JSON renderings.
//
// Determinism contract: identical run configuration yields byte-identical
// output regardless of the worker-pool size, so the echoed configuration
// deliberately omits the parallelism degree.

#include "ckq/kinematics.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ckq {

using nlohmann::json;

inline std::string slots_str(Mask m) {
    if (m == 0) return "1";
    std::string s = "{";
    bool first = true;
    for (int slot : mask_slots(m)) {
        if (!first) s += ",";
        s += std::to_string(slot);
        first = false;
    }
    return s + "}";
}

inline std::string sigma_str(const Perm& p) {
    std::string s = "(";
    for (size_t t = 0; t < p.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(p[t]);
    }
    return s + ")";
}

struct VerdictEntry {
    std::vector<int> j;
    std::vector<int> J;
    Perm sigma;
    bool antipode = false;
    bool orthogonality = false;
    std::optional<bool> rtt;
    std::vector<std::string> witnesses;

    bool admissible() const {
        return antipode && orthogonality && (!rtt.has_value() || *rtt);
    }
    bool operator==(const VerdictEntry&) const = default;
};

struct PairEntry {
    std::vector<int> j;
    std::vector<int> J;
    bool operator==(const PairEntry&) const = default;
};

struct DiffEntry {
    std::vector<PairEntry> missing;
    std::vector<PairEntry> extra;
    bool operator==(const DiffEntry&) const = default;
};

struct ReportDoc {
    json config;
    std::vector<VerdictEntry> verdicts;
    std::optional<DiffEntry> catalog_diff;
    bool operator==(const ReportDoc&) const = default;
};

inline void to_json(json& out, const VerdictEntry& v) {
    out = json{{"j", v.j},
               {"J", v.J},
               {"sigma", v.sigma},
               {"antipode", v.antipode},
               {"orthogonality", v.orthogonality},
               {"rtt", v.rtt.has_value() ? json(*v.rtt) : json(nullptr)},
               {"witnesses", v.witnesses}};
}

inline void from_json(const json& in, VerdictEntry& v) {
    in.at("j").get_to(v.j);
    in.at("J").get_to(v.J);
    in.at("sigma").get_to(v.sigma);
    in.at("antipode").get_to(v.antipode);
    in.at("orthogonality").get_to(v.orthogonality);
    if (in.at("rtt").is_null())
        v.rtt.reset();
    else
        v.rtt = in.at("rtt").get<bool>();
    in.at("witnesses").get_to(v.witnesses);
}

inline void to_json(json& out, const PairEntry& p) {
    out = json{{"j", p.j}, {"J", p.J}};
}

inline void from_json(const json& in, PairEntry& p) {
    in.at("j").get_to(p.j);
    in.at("J").get_to(p.J);
}

inline void to_json(json& out, const DiffEntry& d) {
    out = json{{"missing", d.missing}, {"extra", d.extra}};
}

inline void from_json(const json& in, DiffEntry& d) {
    in.at("missing").get_to(d.missing);
    in.at("extra").get_to(d.extra);
}

inline void to_json(json& out, const ReportDoc& r) {
    out = json{{"config", r.config}, {"verdicts", r.verdicts}};
    if (r.catalog_diff) out["catalog_diff"] = *r.catalog_diff;
}

inline void from_json(const json& in, ReportDoc& r) {
    r.config = in.at("config");
    in.at("verdicts").get_to(r.verdicts);
    if (in.contains("catalog_diff"))
        r.catalog_diff = in.at("catalog_diff").get<DiffEntry>();
    else
        r.catalog_diff.reset();
}

inline VerdictEntry make_verdict_entry(const Candidate& c, const Verdict& v) {
    VerdictEntry e;
    e.j = mask_slots(c.nil);
    e.J = mask_slots(c.J);
    e.sigma = c.sigma;
    e.antipode = v.antipode;
    e.orthogonality = v.orthogonality;
    e.rtt = v.rtt;
    e.witnesses = v.witnesses;
    return e;
}

inline PairEntry make_pair_entry(std::pair<Mask, Mask> p) {
    return PairEntry{mask_slots(p.first), mask_slots(p.second)};
}

// ---- table renderings ------------------------------------------------------

namespace detail {
inline std::string slots_list_str(const std::vector<int>& slots) {
    if (slots.empty()) return "1";
    std::string s = "{";
    for (size_t t = 0; t < slots.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(slots[t]);
    }
    return s + "}";
}
} // namespace detail

inline std::string render_verdict_table(const ReportDoc& doc) {
    std::ostringstream os;
    for (const auto& v : doc.verdicts) {
        os << "candidate: j=" << detail::slots_list_str(v.j)
           << " J=" << detail::slots_list_str(v.J) << " sigma=" << sigma_str(v.sigma)
           << "\n";
        os << "  antipode:      " << (v.antipode ? "pass" : "FAIL") << "\n";
        os << "  orthogonality: " << (v.orthogonality ? "pass" : "FAIL") << "\n";
        os << "  rtt:           "
           << (v.rtt.has_value() ? (*v.rtt ? "pass" : "FAIL") : "skipped") << "\n";
        for (const auto& w : v.witnesses) os << "    witness: " << w << "\n";
        os << "  verdict: " << (v.admissible() ? "ADMISSIBLE" : "INADMISSIBLE")
           << "\n";
    }
    return os.str();
}

inline std::string render_sweep_table(const ReportDoc& doc, std::uint64_t examined) {
    std::ostringstream os;
    os << "sweep n=" << doc.config.value("n", 0)
       << " sigma-mode=" << doc.config.value("sigma_mode", std::string("full"))
       << "\n";
    for (const auto& v : doc.verdicts)
        os << "  admissible: j=" << detail::slots_list_str(v.j)
           << " J=" << detail::slots_list_str(v.J) << " sigma=" << sigma_str(v.sigma)
           << "\n";
    os << "examined " << examined << " candidates, " << doc.verdicts.size()
       << " admissible records\n";
    if (doc.catalog_diff) {
        if (doc.catalog_diff->missing.empty() && doc.catalog_diff->extra.empty()) {
            os << "catalog diff: EMPTY\n";
        } else {
            os << "catalog diff:\n";
            for (const auto& p : doc.catalog_diff->missing)
                os << "  missing: j=" << detail::slots_list_str(p.j)
                   << " J=" << detail::slots_list_str(p.J) << "\n";
            for (const auto& p : doc.catalog_diff->extra)
                os << "  extra: j=" << detail::slots_list_str(p.j)
                   << " J=" << detail::slots_list_str(p.J) << "\n";
        }
    }
    return os.str();
}

inline json kinematics_json(const KinematicsReport& rep, const json& config) {
    json groups = json::array();
    for (const auto& row : rep.rows) {
        json cells = json::array();
        for (const auto& c : row.cells)
            cells.push_back(json{{"J", mask_slots(c.J)},
                                 {"exists", c.exists},
                                 {"witness", c.exists ? json(c.witness) : json(nullptr)},
                                 {"note", c.note}});
        groups.push_back(json{{"name", row.group.name},
                              {"slots", mask_slots(row.group.nil)},
                              {"cells", cells}});
    }
    json chain = json::array();
    for (const auto& l : rep.chain)
        chain.push_back(json{{"from", l.from},
                             {"to", l.to},
                             {"quantizable", l.quantizable},
                             {"evidence", l.evidence}});
    json raw = json::array();
    for (auto p : rep.raw_pairs)
        raw.push_back(json{{"j", mask_slots(p.first)}, {"J", mask_slots(p.second)}});
    return json{{"config", config},
                {"groups", groups},
                {"chain", chain},
                {"chain_broken", rep.chain_broken},
                {"raw_pairs", raw}};
}

inline std::string kinematics_table(const KinematicsReport& rep) {
    std::ostringstream os;
    os << "deformations at n=5:\n";
    for (const auto& row : rep.rows) {
        os << "  " << row.group.name << "  slots=" << slots_str(row.group.nil) << "\n";
        for (const auto& c : row.cells) {
            os << "    J=" << slots_str(c.J) << ": " << (c.exists ? "yes" : "no");
            if (c.exists) os << "  sigma=" << sigma_str(c.witness);
            os << "\n";
        }
        if (row.existing() == 0) os << "    => no quantum deformation\n";
    }
    os << "chain:\n";
    for (const auto& l : rep.chain)
        os << "  " << l.from << " -> " << l.to << ": "
           << (l.quantizable ? "quantizable" : "NOT quantizable") << " ("
           << l.evidence << ")\n";
    os << "chain verdict: ";
    if (rep.chain_broken) {
        const ChainLink* broken = nullptr;
        for (const auto& l : rep.chain)
            if (!l.quantizable) {
                broken = &l;
                break;
            }
        os << "broken at " << broken->from << "->" << broken->to << "\n";
    } else {
        os << "intact\n";
    }
    os << "raw admissible (slots;J) pairs:\n";
    for (auto p : rep.raw_pairs)
        os << "  j=" << slots_str(p.first) << " J=" << slots_str(p.second) << "\n";
    return os.str();
}

inline json catalog_json(int N, const json& config) {
    json entries = json::array();
    for (const auto& e : full_catalog(N))
        entries.push_back(json{{"j", mask_slots(e.nil)},
                               {"J", mask_slots(e.J)},
                               {"sigma", e.sigma},
                               {"source", e.source}});
    json pairs = json::array();
    auto ps = catalog_pairs(N);
    std::vector<std::pair<Mask, Mask>> sorted(ps.begin(), ps.end());
    std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) {
        return std::make_pair(mask_slots(a.first), mask_slots(a.second)) <
               std::make_pair(mask_slots(b.first), mask_slots(b.second));
    });
    for (auto p : sorted)
        pairs.push_back(json{{"j", mask_slots(p.first)}, {"J", mask_slots(p.second)}});
    return json{{"config", config}, {"entries", entries}, {"pairs", pairs}};
}

inline std::string catalog_table(int N) {
    std::ostringstream os;
    os << "classification families at n=" << N << ":\n";
    for (const auto& e : full_catalog(N))
        os << "  j=" << slots_str(e.nil) << " J=" << slots_str(e.J)
           << " sigma=" << sigma_str(e.sigma) << "  [" << e.source << "]\n";
    os << "comparison pairs (closed under slot deletion):\n";
    auto ps = catalog_pairs(N);
    std::vector<std::pair<Mask, Mask>> sorted(ps.begin(), ps.end());
    std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) {
        return std::make_pair(mask_slots(a.first), mask_slots(a.second)) <
               std::make_pair(mask_slots(b.first), mask_slots(b.second));
    });
    for (auto p : sorted)
        os << "  j=" << slots_str(p.first) << " J=" << slots_str(p.second) << "\n";
    return os.str();
}

} // namespace ckq
