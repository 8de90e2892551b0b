#pragma once

// Classification catalog of admissible contractions.
//
// Four families cover the classification: unit-J contractions for odd and
// even N (parameterized families with explicit permutation witnesses), and
// nilpotent-J contractions for odd and even N (finitely many shapes around
// the middle slots, each with permutation window conditions).  Entries whose
// window condition cannot be satisfied at a given N are omitted.  The
// comparison set is closed under deleting nilpotent slots simultaneously
// from the slot set and from J; deletions that empty a nilpotent J drop the
// entry (only the unit-J families assert unit-J admissibility).

#include "ckq/checker.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace ckq {

inline Mask mask_from_slots(std::initializer_list<int> slots) {
    Mask m = 0;
    for (int s : slots) m |= Signature::slot_bit(s);
    return m;
}

inline std::vector<int> mask_slots(Mask m) {
    std::vector<int> out;
    for (int s = 1; m != 0; ++s, m >>= 1)
        if (m & 1u) out.push_back(s);
    return out;
}

// Order masks as sorted slot lists (set-lexicographic), not numerically.
inline bool slots_less(Mask a, Mask b) {
    return mask_slots(a) < mask_slots(b);
}

struct CatalogEntry {
    int N = 0;
    Mask nil = 0;
    Mask J = 0;
    Perm sigma;       // witness permutation
    std::string source;
};

namespace detail {

// Fill the non-middle slots of a witness: remaining values ascending
// v_1..v_{2m} become nested pairs, slot t taking (v_t, v_{2m+1-t}), so each
// pair bracket spans the middle of the value range.
inline Perm witness_from_middle(int N, const std::vector<int>& middle_vals) {
    int n = N / 2;
    Perm p(N, 0);
    std::vector<bool> used(N + 1, false);
    if (N % 2 == 1) {
        p[n] = middle_vals[0];
        used[middle_vals[0]] = true;
    } else {
        p[n - 1] = middle_vals[0];
        p[n] = middle_vals[1];
        used[middle_vals[0]] = used[middle_vals[1]] = true;
    }
    std::vector<int> rest;
    for (int v = 1; v <= N; ++v)
        if (!used[v]) rest.push_back(v);
    int m = static_cast<int>(rest.size()) / 2;
    for (int t = 0; t < m; ++t) {
        p[t] = rest[t];
        p[N - 1 - t] = rest[2 * m - 1 - t];
    }
    return p;
}

} // namespace detail

// Unit-J family, odd N = 2n+1: for m = 0..n the slot set
// {2s : s<=m} u {2r+1 : m<=r<=n-1} with an interleaving witness.
inline std::vector<CatalogEntry> unit_odd_family(int N) {
    int n = N / 2;
    std::vector<CatalogEntry> out;
    for (int m = 0; m <= n; ++m) {
        CatalogEntry e;
        e.N = N;
        e.J = 0;
        for (int s = 1; s <= m; ++s) e.nil |= Signature::slot_bit(2 * s);
        for (int r = m; r <= n - 1; ++r) e.nil |= Signature::slot_bit(2 * r + 1);
        Perm p(N, 0);
        p[n] = 2 * m + 1;
        for (int s = 1; s <= m; ++s) {
            p[s - 1] = 2 * s - 1;
            p[N - s] = 2 * s;
        }
        for (int r = m + 1; r <= n; ++r) {
            p[r - 1] = 2 * r;
            p[N - r] = 2 * r + 1;
        }
        e.sigma = std::move(p);
        e.source = "unit-odd m=" + std::to_string(m);
        out.push_back(std::move(e));
    }
    return out;
}

// Unit-J family, even N = 2n: for 1 <= m <= u <= n the slot set
// {2s : s<=m-1} u {2p-1 : m<=p<=u} u {2r : u<=r<=n-1}.
inline std::vector<CatalogEntry> unit_even_family(int N) {
    int n = N / 2;
    std::vector<CatalogEntry> out;
    for (int m = 1; m <= n; ++m)
        for (int u = m; u <= n; ++u) {
            CatalogEntry e;
            e.N = N;
            e.J = 0;
            for (int s = 1; s <= m - 1; ++s) e.nil |= Signature::slot_bit(2 * s);
            for (int p = m; p <= u; ++p) e.nil |= Signature::slot_bit(2 * p - 1);
            for (int r = u; r <= n - 1; ++r) e.nil |= Signature::slot_bit(2 * r);
            Perm p(N, 0);
            p[n - 1] = 2 * m - 1;
            p[n] = 2 * u;
            for (int s = 1; s <= m - 1; ++s) {
                p[s - 1] = 2 * s - 1;
                p[N - s] = 2 * s;
            }
            for (int q = m; q <= u - 1; ++q) {
                p[q - 1] = 2 * q;
                p[N - q] = 2 * q + 1;
            }
            for (int r = u; r <= n - 1; ++r) {
                p[r - 1] = 2 * r + 1;
                p[N - r] = 2 * r + 2;
            }
            e.sigma = std::move(p);
            e.source = "unit-even m=" + std::to_string(m) + " u=" + std::to_string(u);
            out.push_back(std::move(e));
        }
    return out;
}

// Nilpotent-J family, odd N = 2n+1.  J involves the middle slots n, n+1;
// each shape constrains the middle value of the witness permutation.
inline std::vector<CatalogEntry> nilpotent_odd_family(int N) {
    int n = N / 2;
    std::vector<CatalogEntry> out;
    auto add = [&](Mask nil, Mask J, int mid, const std::string& src) {
        CatalogEntry e;
        e.N = N;
        e.nil = nil;
        e.J = J;
        e.sigma = detail::witness_from_middle(N, {mid});
        e.source = src;
        out.push_back(std::move(e));
    };
    Mask jn = Signature::slot_bit(n);
    Mask jn1 = Signature::slot_bit(n + 1);
    // J = iota_{n+1}: middle value strictly inside (1, n+1), else pinned at 1
    // with slot 1 optionally nilpotent.
    if (n >= 2) add(jn1, jn1, 2, "nil-odd 1a");
    add(jn1, jn1, 1, "nil-odd 1b");
    add(jn1 | Signature::slot_bit(1), jn1, 1, "nil-odd 1b");
    // J = iota_n: middle value strictly inside (n+1, 2n+1), else pinned at
    // 2n+1 with slot 2n optionally nilpotent.
    if (n >= 2) add(jn, jn, n + 2, "nil-odd 2a");
    add(jn, jn, 2 * n + 1, "nil-odd 2b");
    add(jn | Signature::slot_bit(2 * n), jn, 2 * n + 1, "nil-odd 2b");
    // J = iota_n iota_{n+1} as a formal product: any nonempty subset of the
    // middle slots, middle value n+1 (identity-like witness).
    for (Mask X : {jn, jn1, static_cast<Mask>(jn | jn1)})
        add(X, X, n + 1, "nil-odd 3");
    return out;
}

// Nilpotent-J family, even N = 2n (n >= 2).  J involves slots n-1, n, n+1.
inline std::vector<CatalogEntry> nilpotent_even_family(int N) {
    int n = N / 2;
    std::vector<CatalogEntry> out;
    if (n < 2) return out;
    auto add = [&](Mask nil, Mask J, int mid1, int mid2, const std::string& src) {
        CatalogEntry e;
        e.N = N;
        e.nil = nil;
        e.J = J;
        e.sigma = detail::witness_from_middle(N, {mid1, mid2});
        e.source = src;
        out.push_back(std::move(e));
    };
    Mask s1 = Signature::slot_bit(1);
    Mask s2 = Signature::slot_bit(2);
    Mask jm = Signature::slot_bit(n - 1);
    Mask jn = Signature::slot_bit(n);
    Mask jp = Signature::slot_bit(n + 1);
    Mask e1 = Signature::slot_bit(2 * n - 1);
    Mask e2 = Signature::slot_bit(2 * n - 2);
    // J = iota_n; extremes of the middle pair unlock slots 1 and 2n-1.
    add(jn, jn, n, n + 1, "nil-even 1a");
    add(jn | s1, jn, 1, n + 1, "nil-even 1b");
    add(jn | e1, jn, n, 2 * n, "nil-even 1c");
    add(jn | s1 | e1, jn, 1, 2 * n, "nil-even 1d");
    // J = iota_{n-1}.
    add(jm, jm, n, n + 1, "nil-even 2a");
    add(jm | e1, jm, n, 2 * n, "nil-even 2b");
    add(jm | e2 | e1, jm, 2 * n - 1, 2 * n, "nil-even 2c");
    // J = iota_{n+1}.
    add(jp, jp, n, n + 1, "nil-even 3a");
    add(jp | s1, jp, 1, n + 1, "nil-even 3b");
    add(jp | s1 | s2, jp, 1, 2, "nil-even 3c");
    // J = iota_{n-1} iota_n.
    add(jm | jn, jm | jn, n, n + 1, "nil-even 4a");
    add(jm | jn | e1, jm | jn, n, 2 * n, "nil-even 4b");
    // J = iota_n iota_{n+1}.
    add(jn | jp, jn | jp, n, n + 1, "nil-even 5a");
    add(jn | jp | s1, jn | jp, 1, n + 1, "nil-even 5b");
    // J = iota_{n-1} iota_n iota_{n+1} as a formal product: nonempty subsets
    // of the three middle slots with an identity-like witness.
    for (Mask X = 1; X < 8; ++X) {
        Mask nil = 0;
        if (X & 1) nil |= jm;
        if (X & 2) nil |= jn;
        if (X & 4) nil |= jp;
        add(nil, nil, n, n + 1, "nil-even 6");
    }
    return out;
}

inline std::vector<CatalogEntry> full_catalog(int N) {
    std::vector<CatalogEntry> out;
    if (N % 2 == 1) {
        auto a = unit_odd_family(N);
        auto b = nilpotent_odd_family(N);
        out.insert(out.end(), a.begin(), a.end());
        out.insert(out.end(), b.begin(), b.end());
    } else {
        auto a = unit_even_family(N);
        auto b = nilpotent_even_family(N);
        out.insert(out.end(), a.begin(), a.end());
        out.insert(out.end(), b.begin(), b.end());
    }
    // Deduplicate by (slot set, J); keep the first witness.
    std::vector<CatalogEntry> dedup;
    std::set<std::pair<Mask, Mask>> seen;
    for (auto& e : out)
        if (seen.emplace(e.nil, e.J).second) dedup.push_back(e);
    return dedup;
}

// Comparison set: (slot set, J) pairs closed under simultaneous deletion of
// nilpotent slots from the slot set and from J.  Deleting every slot of a
// nilpotent J drops the derived pair; an emptied slot set is trivial.
inline std::set<std::pair<Mask, Mask>> catalog_pairs(int N) {
    std::set<std::pair<Mask, Mask>> pairs;
    for (const auto& e : full_catalog(N)) {
        for (Mask keep = e.nil;; keep = (keep - 1) & e.nil) {
            Mask nil2 = keep;
            Mask J2 = e.J & keep;
            bool ok = nil2 != 0 && (e.J == 0 || J2 != 0);
            if (ok) pairs.emplace(nil2, J2);
            if (keep == 0) break;
        }
    }
    return pairs;
}

struct CatalogDiff {
    std::vector<std::pair<Mask, Mask>> missing;  // expected but not found
    std::vector<std::pair<Mask, Mask>> extra;    // found but not expected
    bool empty() const { return missing.empty() && extra.empty(); }
};

inline CatalogDiff compare_to_catalog(const std::set<std::pair<Mask, Mask>>& found,
                                      int N) {
    auto expected = catalog_pairs(N);
    CatalogDiff d;
    for (auto& p : expected)
        if (!found.count(p)) d.missing.push_back(p);
    for (auto& p : found)
        if (!expected.count(p)) d.extra.push_back(p);
    auto key = [](const std::pair<Mask, Mask>& p) {
        return std::make_pair(mask_slots(p.first), mask_slots(p.second));
    };
    auto by_slots = [&](const auto& a, const auto& b) { return key(a) < key(b); };
    std::sort(d.missing.begin(), d.missing.end(), by_slots);
    std::sort(d.extra.begin(), d.extra.end(), by_slots);
    return d;
}

} // namespace ckq
