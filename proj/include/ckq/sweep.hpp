#pragma once

// Exhaustive admissibility sweeps over (signature, J, sigma) candidates.

#include "ckq/catalog.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>

namespace ckq {

enum class SigmaMode { Full, Canonical };

struct SweepOptions {
    SigmaMode mode = SigmaMode::Full;
    std::optional<Perm> fixed_sigma;  // overrides mode when set
    bool with_rtt = false;
    bool strict = true;
    std::uint64_t budget = 0;  // max candidate count; 0 = unlimited
    int threads = 0;           // 0 = hardware concurrency
};

struct SweepRecord {
    Candidate c;
    Verdict v;
};

struct SweepResult {
    int N = 0;
    std::vector<SweepRecord> admissible;  // sorted: slot set, J, sigma
    std::uint64_t examined = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t need, std::uint64_t budget)
        : std::runtime_error("sweep needs " + std::to_string(need) +
                             " candidates, budget is " + std::to_string(budget)) {}
};

inline std::vector<Perm> sweep_sigmas(int N, const SweepOptions& opt) {
    if (opt.fixed_sigma) return {*opt.fixed_sigma};
    std::vector<Perm> sigmas;
    if (opt.mode == SigmaMode::Full) {
        Perm p = perm_identity(N);
        do {
            sigmas.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    } else {
        sigmas = canonical_sigmas(N);
        // Safety net: also take every classification witness, so a canonical
        // sweep can never miss a cataloged pair by orbit choice alone.
        std::set<Perm> have(sigmas.begin(), sigmas.end());
        std::vector<Perm> extra;
        for (const auto& e : full_catalog(N))
            if (have.insert(e.sigma).second) extra.push_back(e.sigma);
        std::sort(extra.begin(), extra.end());
        sigmas.insert(sigmas.end(), extra.begin(), extra.end());
    }
    return sigmas;
}

inline SweepResult enumerate_admissible(int N, const SweepOptions& opt = {}) {
    std::vector<Perm> sigmas = sweep_sigmas(N, opt);

    std::vector<Candidate> cands;
    Mask all = (N >= 2) ? (Signature::slot_bit(N - 1) * 2 - 1) : 0;
    for (const Perm& s : sigmas)
        for (Mask nil = 1; nil <= all; ++nil)
            for (Mask J = nil;; J = (J - 1) & nil) {
                cands.push_back(Candidate{N, nil, J, s});
                if (J == 0) break;
            }
    if (opt.budget != 0 && cands.size() > opt.budget)
        throw BudgetExceeded(cands.size(), opt.budget);

    // Warm the reference caches before spawning workers.
    ortho_reference(N);
    if (opt.with_rtt) rtt_reference(N);

    std::vector<char> pass(cands.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cands.size()) break;
            const Candidate& c = cands[i];
            if (!check_antipode(c).ok) continue;
            if (!check_orthogonality(c, opt.strict).ok) continue;
            if (opt.with_rtt && !check_rtt(c, opt.strict).ok) continue;
            pass[i] = 1;
        }
    };
    int nthreads = opt.threads > 0
                       ? opt.threads
                       : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    nthreads = std::min<size_t>(nthreads, cands.size() ? cands.size() : 1);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SweepResult res;
    res.N = N;
    res.examined = cands.size();
    for (size_t i = 0; i < cands.size(); ++i)
        if (pass[i]) {
            Verdict v;
            v.antipode = true;
            v.orthogonality = true;
            if (opt.with_rtt) v.rtt = true;
            res.admissible.push_back(SweepRecord{cands[i], v});
        }
    std::sort(res.admissible.begin(), res.admissible.end(),
              [](const SweepRecord& a, const SweepRecord& b) {
                  auto ka = std::make_tuple(mask_slots(a.c.nil), mask_slots(a.c.J),
                                            a.c.sigma);
                  auto kb = std::make_tuple(mask_slots(b.c.nil), mask_slots(b.c.J),
                                            b.c.sigma);
                  return ka < kb;
              });
    return res;
}

inline std::set<std::pair<Mask, Mask>> admissible_pairs(const SweepResult& res) {
    std::set<std::pair<Mask, Mask>> pairs;
    for (const auto& r : res.admissible) pairs.emplace(r.c.nil, r.c.J);
    return pairs;
}

} // namespace ckq
