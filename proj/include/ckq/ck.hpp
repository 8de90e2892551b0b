#pragma once

// Classical Cayley-Klein machinery: contraction signatures, the bracket
// (mu,nu), the anti-diagonal form C_0, the Cartesian-to-symplectic transform
// D and its permuted variants D_sigma, and the symbolic pattern matrix that
// fixes how generator symbols and nilpotent monomials populate each cell of
// a symplectic-basis group element.

#include "ckq/field.hpp"
#include "ckq/matrix.hpp"
#include "ckq/pimenov.hpp"
#include "ckq/symbols.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckq {

// Permutation in one-line notation: sigma[k-1] = sigma_k, values 1..N.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline bool perm_valid(const Perm& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : p) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline Perm perm_inverse(const Perm& p) {
    Perm inv(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i] - 1] = i + 1;
    return inv;
}

// Contraction signature: which of the N-1 slots carry a nilpotent generator.
// Slot l (1-based) is iota_l when bit l-1 of nil is set, and 1 otherwise.
struct Signature {
    int N = 0;
    Mask nil = 0;

    bool slot_nil(int l) const { return (nil >> (l - 1)) & 1u; }
    static Mask slot_bit(int l) { return Mask(1) << (l - 1); }

    std::string str() const {
        std::string s = "(";
        for (int l = 1; l < N; ++l) {
            if (l > 1) s += ",";
            s += slot_nil(l) ? ("i" + std::to_string(l)) : "1";
        }
        return s + ")";
    }
};

// Bracket (mu,nu) = product of slots between the indices; (mu,mu) = 1.
// Always a single monomial with unit coefficient, so a mask suffices.
inline Mask bracket_mask(int mu, int nu, const Signature& sig) {
    if (mu > nu) std::swap(mu, nu);
    Mask m = 0;
    for (int l = mu; l < nu; ++l)
        if (sig.slot_nil(l)) m |= Signature::slot_bit(l);
    return m;
}

inline PimenovElement bracket(int mu, int nu, const Signature& sig) {
    return PimenovElement::monomial(bracket_mask(mu, nu, sig));
}

inline int pair_index(int k, int N) { return N + 1 - k; }

// Anti-diagonal quadratic form: (C_0)_{ik} = delta_{i,k'}.
inline Mat<CRootTwo> build_C0(int N) {
    Mat<CRootTwo> c(N, N);
    for (int i = 1; i <= N; ++i) c(i, pair_index(i, N)) = CRootTwo::one();
    return c;
}

// Cartesian -> symplectic change of basis, a solution of D^t C_0 D = I:
// rows/columns pair k with k' = N+1-k, entries 1/sqrt2 and +-i/sqrt2; the
// middle coordinate of odd N is left untouched.
inline Mat<CRootTwo> build_D(int N) {
    int n = N / 2;
    Mat<CRootTwo> d(N, N);
    CRootTwo h = CRootTwo::inv_sqrt2();
    CRootTwo ih = CRootTwo::i_unit() * h;
    for (int i = 1; i <= n; ++i) {
        d(i, i) = h;
        d(i, pair_index(i, N)) = -ih;
        d(pair_index(i, N), i) = h;
        d(pair_index(i, N), pair_index(i, N)) = ih;
    }
    if (N % 2 == 1) d(n + 1, n + 1) = CRootTwo::one();
    return d;
}

// D_sigma = D V_sigma with (V_sigma)_{ik} = delta_{sigma_i, k}: column
// sigma_a of D_sigma is column a of D.
inline Mat<CRootTwo> build_Dsigma(int N, const Perm& sigma) {
    if (static_cast<int>(sigma.size()) != N || !perm_valid(sigma))
        throw std::invalid_argument("invalid permutation");
    Mat<CRootTwo> d = build_D(N);
    Mat<CRootTwo> r(N, N);
    for (int i = 1; i <= N; ++i)
        for (int a = 1; a <= N; ++a) r(i, sigma[a - 1]) = d(i, a);
    return r;
}

// Inverse without elimination: D_sigma^t C_0 D_sigma = I gives
// D_sigma^{-1} = D_sigma^t C_0.
inline Mat<CRootTwo> dsigma_inverse(const Mat<CRootTwo>& dsigma) {
    return dsigma.transpose() * build_C0(dsigma.rows());
}

// The symbolic cell pattern of a symplectic-basis group element.  Each cell
// is a linear form in generator symbols whose Pimenov coefficients carry the
// bracket monomials dictated by sigma and the signature.  The same pattern
// serves the classical (commuting b-type) and quantum (noncommuting t-type)
// pictures; only symbol display differs.
inline Mat<PolySym> build_B_pattern(int N, const Perm& sigma, const Signature& sig) {
    if (sig.N != N) throw std::invalid_argument("signature size mismatch");
    if (static_cast<int>(sigma.size()) != N || !perm_valid(sigma))
        throw std::invalid_argument("invalid permutation");
    int n = N / 2;
    bool odd = (N % 2 == 1);
    int mid = n + 1;
    Mat<PolySym> b(N, N);

    PimenovElement iu(CRootTwo::i_unit());
    auto br = [&](int a, int c) {
        return PimenovElement::monomial(bracket_mask(sigma[a - 1], sigma[c - 1], sig));
    };
    auto gen = [&](SymKind kind, int r, int c, PimenovElement coeff) {
        return PolySym::generator(make_sym(kind, r, c), std::move(coeff));
    };

    if (odd) b(mid, mid) = gen(SymKind::Plain, mid, mid, PimenovElement::one());

    for (int k = 1; k <= n; ++k) {
        int kp = pair_index(k, N);
        PimenovElement m = br(k, kp);
        b(k, k) = gen(SymKind::Plain, k, k, PimenovElement::one()) +
                  gen(SymKind::Twiddle, k, k, iu * m);
        b(kp, kp) = gen(SymKind::Plain, k, k, PimenovElement::one()) -
                    gen(SymKind::Twiddle, k, k, iu * m);
        b(k, kp) = gen(SymKind::Plain, kp, k, PimenovElement::one()) -
                   gen(SymKind::Twiddle, kp, k, iu * m);
        b(kp, k) = gen(SymKind::Plain, kp, k, PimenovElement::one()) +
                   gen(SymKind::Twiddle, kp, k, iu * m);
        if (odd) {
            PimenovElement m1 = br(k, mid);     // (sigma_k, sigma_mid)
            PimenovElement m2 = br(mid, kp);    // (sigma_mid, sigma_k')
            b(k, mid) = gen(SymKind::Plain, k, mid, m1) -
                        gen(SymKind::Twiddle, k, mid, iu * m2);
            b(kp, mid) = gen(SymKind::Plain, k, mid, m1) +
                         gen(SymKind::Twiddle, k, mid, iu * m2);
            b(mid, k) = gen(SymKind::Plain, mid, k, m1) +
                        gen(SymKind::Twiddle, mid, k, iu * m2);
            b(mid, kp) = gen(SymKind::Plain, mid, k, m1) -
                         gen(SymKind::Twiddle, mid, k, iu * m2);
        }
        for (int p = 1; p <= n; ++p) {
            if (p == k) continue;
            int pp = pair_index(p, N);
            PolySym t = gen(SymKind::Plain, k, p, br(k, p));
            PolySym tp = gen(SymKind::Primed, k, p, br(kp, pp));
            PolySym tw = gen(SymKind::Twiddle, k, p, iu * br(k, pp));
            PolySym twp = gen(SymKind::TwiddlePrimed, k, p, iu * br(kp, p));
            b(k, p) = t + tp + tw - twp;
            b(k, pp) = t - tp - tw - twp;
            b(kp, p) = t - tp + tw + twp;
            b(kp, pp) = t + tp - tw + twp;
        }
    }
    return b;
}

// Union of nilpotent monomials appearing anywhere in a cell.
inline std::vector<Mask> cell_mask_set(const PolySym& cell) { return cell.mask_support(); }

inline bool mask_set_contains(const std::vector<Mask>& big, const std::vector<Mask>& small) {
    for (Mask m : small) {
        bool found = false;
        for (Mask b : big)
            if (b == m) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

// The coproduct-compatibility check on a pattern: multiply two independent
// symbol copies of the pattern matrix (the matrix-product arrangement of the
// coproduct) and verify every product cell's nilpotent-monomial support is
// contained in the original cell's support.  Exact +-i cancellations across
// the summation index are what make this hold, so the product must be taken
// with full coefficients, not as a support union.
struct PatternProductReport {
    bool ok = true;
    int bad_row = 0, bad_col = 0;
    Mask offending = 0;
};

inline PatternProductReport verify_pattern_product_report(const Mat<PolySym>& pattern) {
    int N = pattern.rows();
    Mat<PolySym> left(N, N), right(N, N);
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k) {
            for (auto& [w, c] : pattern(i, k).terms()) {
                Word wl, wr;
                for (SymId s : w) {
                    wl.push_back(make_sym(sym_kind(s), sym_row(s), sym_col(s), 0));
                    wr.push_back(make_sym(sym_kind(s), sym_row(s), sym_col(s), 1));
                }
                left(i, k).add(wl, c);
                right(i, k).add(wr, c);
            }
        }
    Mat<PolySym> prod = left * right;
    PatternProductReport rep;
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k) {
            auto allowed = pattern(i, k).mask_support();
            for (Mask m : prod(i, k).mask_support()) {
                bool found = false;
                for (Mask a : allowed)
                    if (a == m) {
                        found = true;
                        break;
                    }
                if (!found) {
                    rep.ok = false;
                    rep.bad_row = i;
                    rep.bad_col = k;
                    rep.offending = m;
                    return rep;
                }
            }
        }
    return rep;
}

inline bool verify_pattern_product(const Mat<PolySym>& pattern) {
    return verify_pattern_product_report(pattern).ok;
}

} // namespace ckq
