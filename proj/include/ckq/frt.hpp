#pragma once

// Quantum-group layer: the rho weight vector, the deformed metric C, the
// R-matrix with the deformation parameter rescaled through the J-factor
// (q = exp(J v)), the generator matrix with its symbolic cell pattern, the
// antipode S(T) = C T^t C^{-1}, the counit, and the quantum-orthogonality
// residual grids.

#include "ckq/ck.hpp"

#include <complex>
#include <utility>

namespace ckq {

// Half-integer weights (n-1/2, ..., 1/2, 0, -1/2, ...) for odd N and
// integer weights (n-1, ..., 1, 0, 0, -1, ...) for even N; always
// anti-symmetric: rho_{k'} = -rho_k.
inline std::vector<Rat> build_rho(int N) {
    int n = N / 2;
    std::vector<Rat> rho(N + 1); // 1-based
    for (int i = 1; i <= n; ++i) {
        Rat r = (N % 2 == 1) ? Rat(Rat(N, 2) - Rat(i)) : Rat(n - i);
        rho[i] = r;
        rho[pair_index(i, N)] = -r;
    }
    if (N % 2 == 1) rho[n + 1] = Rat(0);
    return rho;
}

// q^x with q = exp(J v): a unit J gives the exact exponential e^{xv}
// (x must then be a half-integer); a nilpotent J truncates to 1 + x J v.
inline PimenovElement q_power(const Rat& x, Mask J) {
    if (x.is_zero()) return PimenovElement::one();
    ExpPoly rate = ExpPoly::term(CRootTwo(x), 1, 0); // x * v
    return pim_exp(PimenovElement::monomial(J, rate));
}

// Deformed metric: anti-diagonal with C_{i,i'} = q^{-rho_i}, equivalently
// C_{i',i} = q^{rho_i}.  This orientation is anchored by the antipode
// identity S(T_{k'k}) = T_{k'k} q^{2 rho_k}.  C^2 = I, so C is its own
// inverse; dropping the exponentials recovers C_0.
inline Mat<PimenovElement> build_C_matrix(int N, const Signature& sig, Mask J) {
    (void)sig;
    auto rho = build_rho(N);
    Mat<PimenovElement> c(N, N);
    for (int i = 1; i <= N; ++i) c(i, pair_index(i, N)) = q_power(-rho[i], J);
    return c;
}

// Row-major pairing of tensor indices: (i,j) -> (i-1)*N + j, 1-based.
inline int tensor_index(int i, int j, int N) { return (i - 1) * N + j; }

// Standard orthogonal-series R-matrix with q = exp(Jv):
//   R = sum_{i,j} q^{delta_ij - delta_{i j'}} E_ii (x) E_jj
//     + lambda sum_{i>j} (E_ij (x) E_ji - q^{rho_i - rho_j} E_ij (x) E_{i'j'})
// with lambda = q - q^{-1}.
inline Mat<PimenovElement> build_R_matrix(int N, const Signature& sig, Mask J) {
    (void)sig;
    auto rho = build_rho(N);
    Mat<PimenovElement> r(N * N, N * N);
    PimenovElement lambda = q_power(Rat(1), J) - q_power(Rat(-1), J);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            int e = (i == j ? 1 : 0) - (i == pair_index(j, N) ? 1 : 0);
            r(tensor_index(i, j, N), tensor_index(i, j, N)) = q_power(Rat(e), J);
        }
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < i; ++j) {
            r(tensor_index(i, j, N), tensor_index(j, i, N)) += lambda;
            r(tensor_index(i, pair_index(i, N), N), tensor_index(j, pair_index(j, N), N)) -=
                lambda * q_power(rho[i] - rho[j], J);
        }
    return r;
}

// Quantum generator matrix: the shared symbolic pattern, read with
// noncommuting symbols.
inline Mat<PolySym> build_T_sigma(int N, const Perm& sigma, const Signature& sig) {
    return build_B_pattern(N, sigma, sig);
}

inline PolySym poly_scalar(const PimenovElement& c) { return PolySym(c); }

inline Mat<PolySym> scalar_matrix(const Mat<PimenovElement>& m) {
    Mat<PolySym> r(m.rows(), m.cols());
    for (int i = 1; i <= m.rows(); ++i)
        for (int k = 1; k <= m.cols(); ++k)
            if (!m(i, k).is_zero()) r(i, k) = poly_scalar(m(i, k));
    return r;
}

// Antipode S(T) = C T^t C^{-1}; C is an involution so C^{-1} = C.
inline Mat<PolySym> antipode_matrix(const Mat<PolySym>& T, const Mat<PimenovElement>& C) {
    Mat<PolySym> c = scalar_matrix(C);
    return c * T.transpose() * c;
}

// Counit: 1 on the plain diagonal generators t_kk and the central one, 0 on
// every other generator.
inline int counit_value(SymId s) {
    return (sym_kind(s) == SymKind::Plain && sym_row(s) == sym_col(s)) ? 1 : 0;
}

// Apply the counit to a linear form in generators.
inline PimenovElement counit_apply(const PolySym& cell) {
    PimenovElement acc;
    for (auto& [w, c] : cell.terms()) {
        int factor = 1;
        for (SymId s : w) factor *= counit_value(s);
        if (factor != 0) acc += c;
    }
    return acc;
}

// The two quantum-orthogonality residual grids T C T^t - C and T^t C T - C.
inline std::pair<Mat<PolySym>, Mat<PolySym>> orthogonality_residual(
    const Mat<PolySym>& T, const Mat<PimenovElement>& C) {
    Mat<PolySym> c = scalar_matrix(C);
    Mat<PolySym> tt = T.transpose();
    return {T * c * tt - c, tt * c * T - c};
}

// ---- Yang-Baxter helpers -------------------------------------------------

// Lift an N^2 x N^2 two-leg matrix to legs (a,b) of a three-leg space.
template <typename T>
Mat<T> lift_two_leg(const Mat<T>& r, int N, int lega, int legb) {
    Mat<T> out(N * N * N, N * N * N);
    int idx[4];
    for (int i1 = 1; i1 <= N; ++i1)
        for (int i2 = 1; i2 <= N; ++i2)
            for (int i3 = 1; i3 <= N; ++i3) {
                int iv[4] = {0, i1, i2, i3};
                for (int k1 = 1; k1 <= N; ++k1)
                    for (int k2 = 1; k2 <= N; ++k2)
                        for (int k3 = 1; k3 <= N; ++k3) {
                            int kv[4] = {0, k1, k2, k3};
                            // spectator leg must be diagonal
                            int spect = 6 - lega - legb;
                            if (iv[spect] != kv[spect]) continue;
                            (void)idx;
                            int row = (i1 - 1) * N * N + (i2 - 1) * N + i3;
                            int col = (k1 - 1) * N * N + (k2 - 1) * N + k3;
                            out(row, col) =
                                r(tensor_index(iv[lega], iv[legb], N),
                                  tensor_index(kv[lega], kv[legb], N));
                        }
            }
    return out;
}

// Formal Yang-Baxter residual R12 R13 R23 - R23 R13 R12 on three legs.
template <typename T>
Mat<T> yang_baxter_residual(const Mat<T>& r, int N) {
    Mat<T> r12 = lift_two_leg(r, N, 1, 2);
    Mat<T> r13 = lift_two_leg(r, N, 1, 3);
    Mat<T> r23 = lift_two_leg(r, N, 2, 3);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

// Numeric copy of a unit-signature R-matrix at a concrete v.
inline Mat<std::complex<double>> numeric_matrix(const Mat<PimenovElement>& m, double v) {
    Mat<std::complex<double>> out(m.rows(), m.cols());
    for (int i = 1; i <= m.rows(); ++i)
        for (int k = 1; k <= m.cols(); ++k) {
            const PimenovElement& e = m(i, k);
            if (e.is_zero()) continue;
            if (e.components().size() > 1 || e.components().begin()->first != 0)
                throw std::domain_error("numeric_matrix needs nilpotent-free entries");
            out(i, k) = e.components().begin()->second.eval_double(v);
        }
    return out;
}

} // namespace ckq
