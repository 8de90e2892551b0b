#pragma once

// Kinematic-group dictionary at N=5 and the deformation classification
// derived from a sweep: which four-dimensional groups admit a quantum
// deformation, with which J, and where the contraction chain breaks.
//
// Only the complex forms enter: each group is identified by the set of
// nilpotent slots of its signature.  The Carroll assignment {4} is the
// complex form of the flat-slot reduction of SO(5; iota_1,1,1,iota_4); the
// report carries the raw admissible sets alongside so the mapping can be
// re-derived from the data.

#include "ckq/sweep.hpp"

namespace ckq {

struct KinematicGroup {
    std::string name;
    Mask nil = 0;
};

inline std::vector<KinematicGroup> kinematic_groups() {
    return {
        {"Euclid E(4)", mask_from_slots({1})},
        {"Newton N(4)", mask_from_slots({2})},
        {"Carroll C(4)", mask_from_slots({4})},
        {"Galilei G(4)", mask_from_slots({1, 2})},
        {"CarrollFlat C0(4)", mask_from_slots({1, 4})},
    };
}

struct DeformationCell {
    Mask J = 0;
    bool exists = false;
    Perm witness;       // empty when not admissible
    std::string note;
};

struct DeformationRow {
    KinematicGroup group;
    std::vector<DeformationCell> cells;  // J = unit first, then submask order

    int existing() const {
        int c = 0;
        for (auto& cell : cells)
            if (cell.exists) ++c;
        return c;
    }
};

struct ChainLink {
    std::string from, to;
    bool quantizable = false;
    std::string evidence;
};

struct KinematicsReport {
    std::vector<DeformationRow> rows;
    std::vector<ChainLink> chain;
    bool chain_broken = false;
    std::vector<std::pair<Mask, Mask>> raw_pairs;  // full admissible projection
};

// Pure projection of an N=5 sweep result; never runs new checks.
inline KinematicsReport kinematics_report(const SweepResult& sweep) {
    KinematicsReport rep;
    std::map<std::pair<Mask, Mask>, const SweepRecord*> first_witness;
    for (const auto& r : sweep.admissible)
        first_witness.emplace(std::make_pair(r.c.nil, r.c.J), &r);
    for (auto& [key, rec] : first_witness) rep.raw_pairs.push_back(key);

    for (const auto& g : kinematic_groups()) {
        DeformationRow row;
        row.group = g;
        std::vector<Mask> js{0};
        std::vector<Mask> nz;
        for (Mask J = g.nil; J != 0; J = (J - 1) & g.nil) nz.push_back(J);
        std::sort(nz.begin(), nz.end(), slots_less);
        js.insert(js.end(), nz.begin(), nz.end());
        for (Mask J : js) {
            DeformationCell cell;
            cell.J = J;
            auto it = first_witness.find({g.nil, J});
            if (it != first_witness.end()) {
                cell.exists = true;
                cell.witness = it->second->c.sigma;
                cell.note = "admissible";
            } else {
                cell.exists = false;
                cell.note = "inadmissible for every examined sigma";
            }
            row.cells.push_back(std::move(cell));
        }
        rep.rows.push_back(std::move(row));
    }

    auto row_has_any = [&](const std::string& prefix) {
        for (auto& r : rep.rows)
            if (r.group.name.rfind(prefix, 0) == 0) return r.existing() > 0;
        return false;
    };
    ChainLink l1{"SO(5)", "E(4)", row_has_any("Euclid"), ""};
    l1.evidence = l1.quantizable ? "E(4) deformation exists"
                                 : "no E(4) deformation found";
    ChainLink l2{"E(4)", "G(4)", row_has_any("Galilei"), ""};
    l2.evidence = l2.quantizable
                      ? "G(4) deformation exists"
                      : "slot set {1,2} is inadmissible for every J";
    rep.chain = {l1, l2};
    rep.chain_broken = !(l1.quantizable && l2.quantizable);
    return rep;
}

// Classification of the n primitive 2x2 diagonal blocks of a candidate:
// unit bracket (sigma_k, sigma_k') -> rotation block SO(2); nilpotent
// bracket -> Galilei block G(1,1).  Depends only on brackets.
inline std::vector<std::string> primitive_element_summary(const Candidate& c) {
    std::vector<std::string> out;
    Signature sig = c.sig();
    int n = c.N / 2;
    for (int k = 1; k <= n; ++k) {
        Mask br = bracket_mask(c.sigma[k - 1], c.sigma[pair_index(k, c.N) - 1], sig);
        out.push_back(br == 0 ? "SO(2)" : "G(1,1)");
    }
    return out;
}

} // namespace ckq
