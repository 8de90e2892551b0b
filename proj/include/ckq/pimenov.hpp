#pragma once

// Nilpotent commutative algebra on generators iota_1 .. iota_n with
// iota_k^2 = 0 and iota_k * iota_m = iota_m * iota_k != 0 for k != m.
// Elements are finite sums over square-free monomials in the generators
// (encoded as bitmasks) with exponential-polynomial coefficients.
//
// Division is only defined as exact extraction of a monomial factor
// (iota_k / iota_k = 1); an element is invertible iff its monomial-free
// part is invertible, in which case the geometric series terminates.

#include "ckq/exppoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckq {

// Bit k-1 set means the monomial contains iota_k.
using Mask = std::uint32_t;

inline std::string mask_str(Mask m) {
    if (m == 0) return "1";
    std::string s;
    for (int k = 1; k <= 32; ++k)
        if (m & (Mask(1) << (k - 1))) {
            if (!s.empty()) s += "*";
            s += "i" + std::to_string(k);
        }
    return s;
}

class PimenovElement {
public:
    PimenovElement() = default;
    PimenovElement(ExpPoly scalar) { add_component(0, std::move(scalar)); }
    PimenovElement(CRootTwo c) : PimenovElement(ExpPoly(c)) {}
    PimenovElement(Rat r) : PimenovElement(ExpPoly(r)) {}
    PimenovElement(long long n) : PimenovElement(ExpPoly(n)) {}

    static PimenovElement one() { return PimenovElement(ExpPoly::one()); }
    static PimenovElement iota(int k) { return monomial(Mask(1) << (k - 1)); }
    static PimenovElement monomial(Mask m, ExpPoly c = ExpPoly::one()) {
        PimenovElement e;
        e.add_component(m, std::move(c));
        return e;
    }

    const std::map<Mask, ExpPoly>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    void add_component(Mask m, ExpPoly c) {
        if (c.is_zero()) return;
        auto it = comps_.find(m);
        if (it == comps_.end()) {
            comps_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    ExpPoly component(Mask m) const {
        auto it = comps_.find(m);
        return it == comps_.end() ? ExpPoly() : it->second;
    }

    PimenovElement operator-() const {
        PimenovElement r;
        for (auto& [m, c] : comps_) r.comps_.emplace(m, -c);
        return r;
    }

    friend PimenovElement operator+(const PimenovElement& x, const PimenovElement& y) {
        PimenovElement r = x;
        for (auto& [m, c] : y.comps_) r.add_component(m, c);
        return r;
    }
    friend PimenovElement operator-(const PimenovElement& x, const PimenovElement& y) {
        return x + (-y);
    }
    friend PimenovElement operator*(const PimenovElement& x, const PimenovElement& y) {
        PimenovElement r;
        for (auto& [ma, ca] : x.comps_)
            for (auto& [mb, cb] : y.comps_) {
                if (ma & mb) continue; // any repeated iota_k annihilates the product
                r.add_component(ma | mb, ca * cb);
            }
        return r;
    }
    PimenovElement& operator+=(const PimenovElement& o) { return *this = *this + o; }
    PimenovElement& operator-=(const PimenovElement& o) { return *this = *this - o; }
    PimenovElement& operator*=(const PimenovElement& o) { return *this = *this * o; }

    friend bool operator==(const PimenovElement& x, const PimenovElement& y) {
        return x.comps_ == y.comps_;
    }

    PimenovElement pow(int e) const {
        PimenovElement acc = one();
        for (int t = 0; t < e; ++t) acc *= *this;
        return acc;
    }

    // Invertible iff the monomial-free part is a unit of the coefficient ring.
    bool is_invertible() const {
        auto it = comps_.find(0);
        return it != comps_.end() && it->second.is_invertible();
    }

    PimenovElement inverse() const {
        auto it = comps_.find(0);
        if (it == comps_.end() || !it->second.is_invertible())
            throw std::domain_error("non-invertible Pimenov element");
        PimenovElement u0inv(it->second.inverse());
        PimenovElement nil = *this;
        nil.comps_.erase(0);
        // x = u0 (1 + u0^-1 nil); geometric series in the nilpotent part terminates.
        PimenovElement t = u0inv * nil;
        PimenovElement acc = one();
        PimenovElement p = one();
        while (true) {
            p = p * (-t);
            if (p.is_zero()) break;
            acc += p;
        }
        return u0inv * acc;
    }

    // Exact division by the monomial with the given mask: every component of
    // *this must contain that monomial.  This is the only legal division by
    // nilpotents (iota_k / iota_k = 1); otherwise returns nullopt.
    std::optional<PimenovElement> extract_factor(Mask factor) const {
        PimenovElement r;
        for (auto& [m, c] : comps_) {
            if ((m & factor) != factor) return std::nullopt;
            r.add_component(m & ~factor, c);
        }
        return r;
    }

    // Substitute iota_k -> 1 for every k in the mask (undo a contraction slot).
    PimenovElement substitute_unit(Mask units) const {
        PimenovElement r;
        for (auto& [m, c] : comps_) r.add_component(m & ~units, c);
        return r;
    }

    enum class Grade { Zero, Homogeneous, Mixed };
    Grade grade_kind() const {
        if (comps_.empty()) return Grade::Zero;
        return comps_.size() == 1 ? Grade::Homogeneous : Grade::Mixed;
    }
    Mask homogeneous_mask() const {
        if (comps_.size() != 1) throw std::domain_error("element is not monomial-homogeneous");
        return comps_.begin()->first;
    }

    std::string str() const {
        if (comps_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [m, c] : comps_) {
            if (!first) s += " + ";
            first = false;
            s += "[" + c.str() + "]";
            if (m != 0) s += "*" + mask_str(m);
        }
        return s;
    }

private:
    std::map<Mask, ExpPoly> comps_;
};

// v -> 0 limit (drop exponentials) applied per monomial component.
inline PimenovElement classical_limit(const PimenovElement& x) {
    PimenovElement r;
    for (auto& [m, c] : x.components()) {
        CRootTwo flat = c.drop_exponentials();
        if (!flat.is_zero()) r.add_component(m, ExpPoly(flat));
    }
    return r;
}

// Exponential of a Pimenov-valued rate times v.  The argument must be a sum
// of components r_mu * v (a single degree-one term in v per monomial).  Then
//   exp(sum_mu r_mu v mu) = exp(r_0 v) * prod_{mu != 0} (1 + r_mu v mu)
// because each nilpotent monomial squares to zero.  The monomial-free rate
// must be a half-integer rational so the result stays in the exact ring.
inline PimenovElement pim_exp(const PimenovElement& x) {
    PimenovElement acc = PimenovElement::one();
    for (auto& [m, c] : x.components()) {
        if (c.terms().size() != 1)
            throw std::domain_error("pim_exp rate must be a single multiple of v");
        auto& [key, coeff] = *c.terms().begin();
        if (key.m != 1 || key.e2 != 0)
            throw std::domain_error("pim_exp rate must be linear in v with no exponential");
        if (m == 0) {
            // exp(r v) with 2r integral
            if (!coeff.imag().is_zero() || !coeff.real().root_part().is_zero())
                throw std::domain_error("pim_exp scalar rate must be rational");
            Rat r2 = Rat(2) * coeff.real().rat_part();
            if (!r2.is_integer())
                throw std::domain_error("pim_exp scalar rate must be a half-integer");
            acc *= PimenovElement(ExpPoly::exp_rate(static_cast<int>(r2.num())));
        } else {
            PimenovElement factor = PimenovElement::one();
            factor.add_component(m, ExpPoly::term(coeff, 1, 0));
            acc *= factor;
        }
    }
    return acc;
}

} // namespace ckq
