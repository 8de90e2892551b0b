#pragma once

// Admissibility checker for contraction candidates (N, signature, J, sigma).
//
// A candidate passes when the Hopf structure maps survive the nilpotent
// substitution with the same shape as before contraction:
//
//  * antipode: every cell of S(T) = C T^t C^{-1} may only contain nilpotent
//    monomials already allowed by the generator pattern in that cell
//    ("the same distribution of the nilpotent parameters in its elements");
//
//  * orthogonality: the residual grids T C T^t - C and T^t C T - C decompose
//    per cell into iota-graded word equations; the number of independent
//    equations (proportionality classes of nonzero graded components) must
//    equal the uncontracted reference count, and — strict mode — no cell
//    with a nonzero reference equation may collapse to zero;
//
//  * optionally the same counting criterion on the RTT grid
//    R T1 T2 - T2 T1 R.

#include "ckq/frt.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace ckq {

struct Candidate {
    int N = 0;
    Mask nil = 0;   // nilpotent slots of the signature
    Mask J = 0;     // J-factor monomial (0 = unit); normalized to J & nil
    Perm sigma;

    Signature sig() const { return Signature{N, nil}; }
    std::string str() const {
        std::string s = "N=" + std::to_string(N) + " j=" + sig().str() +
                        " J=" + mask_str(J) + " sigma=(";
        for (size_t t = 0; t < sigma.size(); ++t) {
            if (t) s += ",";
            s += std::to_string(sigma[t]);
        }
        return s + ")";
    }
};

struct CheckReport {
    bool ok = true;
    std::vector<std::string> witnesses;
};

// ---- antipode ------------------------------------------------------------

inline CheckReport check_antipode(const Candidate& c) {
    Signature sig = c.sig();
    auto T = build_T_sigma(c.N, c.sigma, sig);
    auto C = build_C_matrix(c.N, sig, c.J);
    auto S = antipode_matrix(T, C);
    CheckReport rep;
    for (int i = 1; i <= c.N; ++i)
        for (int k = 1; k <= c.N; ++k) {
            auto allowed = T(i, k).mask_support();
            for (Mask m : S(i, k).mask_support()) {
                bool found = false;
                for (Mask a : allowed)
                    if (a == m) {
                        found = true;
                        break;
                    }
                if (!found) {
                    rep.ok = false;
                    rep.witnesses.push_back(
                        "antipode cell (" + std::to_string(i) + "," + std::to_string(k) +
                        "): monomial " + mask_str(m) + " escapes the pattern");
                    if (rep.witnesses.size() >= 4) return rep;
                }
            }
        }
    return rep;
}

// ---- orthogonality -------------------------------------------------------

// One graded equation: the word polynomial multiplying a fixed iota monomial
// in a fixed grid cell.
using GradedEq = std::map<Word, ExpPoly>;

// Exact proportionality over the integral coefficient ring: equal word
// support and equal cross-ratios against the anchor word.
inline bool proportional(const GradedEq& f, const GradedEq& g) {
    if (f.size() != g.size()) return false;
    auto itf = f.begin();
    auto itg = g.begin();
    const ExpPoly& f0 = itf->second;
    const ExpPoly& g0 = itg->second;
    for (; itf != f.end(); ++itf, ++itg) {
        if (itf->first != itg->first) return false;
        if (!(itf->second * g0 == itg->second * f0)) return false;
    }
    return true;
}

// Number of proportionality classes among all nonzero graded components of a
// grid.  Equations with different word supports are never proportional, so
// bucket by support first.
inline int count_equation_classes(const Mat<PolySym>& grid) {
    std::map<std::vector<Word>, std::vector<GradedEq>> buckets;
    for (int i = 1; i <= grid.rows(); ++i)
        for (int k = 1; k <= grid.cols(); ++k)
            for (auto& [m, eq] : grid(i, k).graded()) {
                if (eq.empty()) continue;
                std::vector<Word> support;
                support.reserve(eq.size());
                for (auto& [w, p] : eq) support.push_back(w);
                auto& bucket = buckets[std::move(support)];
                bool found = false;
                for (auto& rep : bucket)
                    if (proportional(rep, eq)) {
                        found = true;
                        break;
                    }
                if (!found) bucket.push_back(eq);
            }
    int classes = 0;
    for (auto& [s, b] : buckets) classes += static_cast<int>(b.size());
    return classes;
}

struct OrthoReference {
    int classes1 = 0;
    int classes2 = 0;
    std::vector<std::pair<int, int>> nonzero1;
    std::vector<std::pair<int, int>> nonzero2;
};

inline const OrthoReference& ortho_reference(int N) {
    static std::map<int, OrthoReference> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    Signature sig{N, 0};
    auto T = build_T_sigma(N, perm_identity(N), sig);
    auto C = build_C_matrix(N, sig, 0);
    auto [g1, g2] = orthogonality_residual(T, C);
    OrthoReference ref;
    ref.classes1 = count_equation_classes(g1);
    ref.classes2 = count_equation_classes(g2);
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k) {
            if (!g1(i, k).is_zero()) ref.nonzero1.emplace_back(i, k);
            if (!g2(i, k).is_zero()) ref.nonzero2.emplace_back(i, k);
        }
    return cache.emplace(N, std::move(ref)).first->second;
}

inline CheckReport check_orthogonality(const Candidate& c, bool strict = true) {
    Signature sig = c.sig();
    auto T = build_T_sigma(c.N, c.sigma, sig);
    auto C = build_C_matrix(c.N, sig, c.J);
    auto [g1, g2] = orthogonality_residual(T, C);
    const OrthoReference& ref = ortho_reference(c.N);
    CheckReport rep;
    int c1 = count_equation_classes(g1);
    int c2 = count_equation_classes(g2);
    if (c1 != ref.classes1)
        rep.witnesses.push_back("orthogonality grid TCTt: " + std::to_string(c1) +
                                " equation classes vs reference " +
                                std::to_string(ref.classes1));
    if (c2 != ref.classes2)
        rep.witnesses.push_back("orthogonality grid TtCT: " + std::to_string(c2) +
                                " equation classes vs reference " +
                                std::to_string(ref.classes2));
    if (strict) {
        for (auto [i, k] : ref.nonzero1)
            if (g1(i, k).is_zero()) {
                rep.witnesses.push_back("orthogonality grid TCTt cell (" +
                                        std::to_string(i) + "," + std::to_string(k) +
                                        ") lost its equation");
                break;
            }
        for (auto [i, k] : ref.nonzero2)
            if (g2(i, k).is_zero()) {
                rep.witnesses.push_back("orthogonality grid TtCT cell (" +
                                        std::to_string(i) + "," + std::to_string(k) +
                                        ") lost its equation");
                break;
            }
    }
    rep.ok = rep.witnesses.empty();
    return rep;
}

// ---- RTT (optional) ------------------------------------------------------

// Contract the sparse R against two generator copies directly:
//   (R T1 T2)_{(i1,i2),(k1,k2)} = sum_{a1,a2} R_{(i1,i2),(a1,a2)} T_{a1 k1} T_{a2 k2}
//   (T2 T1 R)_{(i1,i2),(k1,k2)} = sum_{b1,a2} T_{i2 a2} T_{i1 b1} R_{(b1,a2),(k1,k2)}
inline Mat<PolySym> rtt_residual(const Mat<PolySym>& T, const Mat<PimenovElement>& R) {
    int N = T.rows();
    int n2 = N * N;
    Mat<PolySym> out(n2, n2);
    for (int i1 = 1; i1 <= N; ++i1)
        for (int i2 = 1; i2 <= N; ++i2) {
            int row = tensor_index(i1, i2, N);
            for (int a1 = 1; a1 <= N; ++a1)
                for (int a2 = 1; a2 <= N; ++a2) {
                    const PimenovElement& r = R(row, tensor_index(a1, a2, N));
                    if (r.is_zero()) continue;
                    PolySym rs = poly_scalar(r);
                    for (int k1 = 1; k1 <= N; ++k1)
                        for (int k2 = 1; k2 <= N; ++k2) {
                            if (T(a1, k1).is_zero() || T(a2, k2).is_zero()) continue;
                            out(row, tensor_index(k1, k2, N)) +=
                                rs * T(a1, k1) * T(a2, k2);
                        }
                }
        }
    for (int b1 = 1; b1 <= N; ++b1)
        for (int a2 = 1; a2 <= N; ++a2) {
            int rrow = tensor_index(b1, a2, N);
            for (int k1 = 1; k1 <= N; ++k1)
                for (int k2 = 1; k2 <= N; ++k2) {
                    const PimenovElement& r = R(rrow, tensor_index(k1, k2, N));
                    if (r.is_zero()) continue;
                    PolySym rs = poly_scalar(r);
                    for (int i1 = 1; i1 <= N; ++i1)
                        for (int i2 = 1; i2 <= N; ++i2)
                            out(tensor_index(i1, i2, N), tensor_index(k1, k2, N)) -=
                                T(i2, a2) * T(i1, b1) * rs;
                }
        }
    return out;
}

struct RttReference {
    int classes = 0;
    std::vector<std::pair<int, int>> nonzero;
};

inline const RttReference& rtt_reference(int N) {
    static std::map<int, RttReference> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    Signature sig{N, 0};
    auto T = build_T_sigma(N, perm_identity(N), sig);
    auto R = build_R_matrix(N, sig, 0);
    auto grid = rtt_residual(T, R);
    RttReference ref;
    ref.classes = count_equation_classes(grid);
    for (int i = 1; i <= N * N; ++i)
        for (int k = 1; k <= N * N; ++k)
            if (!grid(i, k).is_zero()) ref.nonzero.emplace_back(i, k);
    return cache.emplace(N, std::move(ref)).first->second;
}

inline CheckReport check_rtt(const Candidate& c, bool strict = true) {
    Signature sig = c.sig();
    auto T = build_T_sigma(c.N, c.sigma, sig);
    auto R = build_R_matrix(c.N, sig, c.J);
    auto grid = rtt_residual(T, R);
    const RttReference& ref = rtt_reference(c.N);
    CheckReport rep;
    int classes = count_equation_classes(grid);
    if (classes != ref.classes)
        rep.witnesses.push_back("rtt grid: " + std::to_string(classes) +
                                " equation classes vs reference " +
                                std::to_string(ref.classes));
    if (strict)
        for (auto [i, k] : ref.nonzero)
            if (grid(i, k).is_zero()) {
                rep.witnesses.push_back("rtt cell (" + std::to_string(i) + "," +
                                        std::to_string(k) + ") lost its equation");
                break;
            }
    rep.ok = rep.witnesses.empty();
    return rep;
}

// ---- combined verdict ----------------------------------------------------

struct Verdict {
    bool antipode = false;
    bool orthogonality = false;
    std::optional<bool> rtt;
    std::vector<std::string> witnesses;

    bool admissible() const {
        return antipode && orthogonality && (!rtt.has_value() || *rtt);
    }
};

inline Verdict check_candidate(const Candidate& c, bool with_rtt = false,
                               bool strict = true) {
    Verdict v;
    auto a = check_antipode(c);
    v.antipode = a.ok;
    v.witnesses.insert(v.witnesses.end(), a.witnesses.begin(), a.witnesses.end());
    auto o = check_orthogonality(c, strict);
    v.orthogonality = o.ok;
    v.witnesses.insert(v.witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    if (with_rtt) {
        auto r = check_rtt(c, strict);
        v.rtt = r.ok;
        v.witnesses.insert(v.witnesses.end(), r.witnesses.begin(), r.witnesses.end());
    }
    return v;
}

// ---- canonical sigma representatives --------------------------------------

// The pattern is unchanged (up to relabeling of generator symbols and
// simultaneous row/column pairing moves) under swapping the two members of a
// value pair and under permuting whole pairs, so one representative per
// orbit suffices for sweeps.  Representatives: pairs (a<b) sorted by the
// smaller member; odd N additionally chooses the fixed middle value, even N
// the middle pair with its own orientation canonicalized.
namespace detail {
inline void matchings(std::vector<int> values, std::vector<std::pair<int, int>>& acc,
                      std::vector<std::vector<std::pair<int, int>>>& out) {
    if (values.empty()) {
        out.push_back(acc);
        return;
    }
    int a = values.front();
    for (size_t t = 1; t < values.size(); ++t) {
        std::vector<int> rest;
        for (size_t s = 1; s < values.size(); ++s)
            if (s != t) rest.push_back(values[s]);
        acc.emplace_back(a, values[t]);
        matchings(std::move(rest), acc, out);
        acc.pop_back();
    }
}
} // namespace detail

inline std::vector<Perm> canonical_sigmas(int N) {
    std::vector<Perm> out;
    int n = N / 2;
    if (N % 2 == 1) {
        for (int mid = 1; mid <= N; ++mid) {
            std::vector<int> rest;
            for (int v = 1; v <= N; ++v)
                if (v != mid) rest.push_back(v);
            std::vector<std::pair<int, int>> acc;
            std::vector<std::vector<std::pair<int, int>>> ms;
            detail::matchings(rest, acc, ms);
            for (auto& m : ms) {
                Perm p(N);
                p[n] = mid;
                for (int t = 0; t < n; ++t) {
                    p[t] = m[t].first;
                    p[N - 1 - t] = m[t].second;
                }
                out.push_back(std::move(p));
            }
        }
    } else {
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b) {
                std::vector<int> rest;
                for (int v = 1; v <= N; ++v)
                    if (v != a && v != b) rest.push_back(v);
                std::vector<std::pair<int, int>> acc;
                std::vector<std::vector<std::pair<int, int>>> ms;
                detail::matchings(rest, acc, ms);
                for (auto& m : ms) {
                    Perm p(N);
                    p[n - 1] = a;
                    p[n] = b;
                    for (int t = 0; t < n - 1; ++t) {
                        p[t] = m[t].first;
                        p[N - 1 - t] = m[t].second;
                    }
                    out.push_back(std::move(p));
                }
            }
    }
    return out;
}

} // namespace ckq
