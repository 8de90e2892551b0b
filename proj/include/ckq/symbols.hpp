#pragma once

// Free noncommutative polynomial algebra over generator symbols with
// Pimenov-valued coefficients.  Words are ordered sequences of symbol ids and
// are never reordered: products concatenate.  The coefficient algebra is
// commutative and commutes with the symbols.

#include "ckq/pimenov.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ckq {

// Four symbol families per index pair; display differs between the classical
// generator set (b, b', bt, bt') and the quantum one (t, t', tau, tau').
enum class SymKind : std::uint8_t { Plain = 0, Primed = 1, Twiddle = 2, TwiddlePrimed = 3 };

// copy distinguishes tensor-product legs (0 = left leg, 1 = right leg).
using SymId = std::uint32_t;

inline SymId make_sym(SymKind kind, int r, int c, int copy = 0) {
    return (static_cast<SymId>(copy) << 24) | (static_cast<SymId>(kind) << 16) |
           (static_cast<SymId>(r) << 8) | static_cast<SymId>(c);
}
inline SymKind sym_kind(SymId s) { return static_cast<SymKind>((s >> 16) & 0xff); }
inline int sym_row(SymId s) { return static_cast<int>((s >> 8) & 0xff); }
inline int sym_col(SymId s) { return static_cast<int>(s & 0xff); }
inline int sym_copy(SymId s) { return static_cast<int>((s >> 24) & 0xff); }

inline std::string sym_name(SymId s, bool quantum = true) {
    static const char* qn[4] = {"t", "t'", "tau", "tau'"};
    static const char* cn[4] = {"b", "b'", "bt", "bt'"};
    const char* base = (quantum ? qn : cn)[static_cast<int>(sym_kind(s))];
    std::string out = std::string(base) + "_" + std::to_string(sym_row(s)) + "," +
                      std::to_string(sym_col(s));
    if (sym_copy(s) != 0) out += "#" + std::to_string(sym_copy(s));
    return out;
}

using Word = std::vector<SymId>;

inline std::string word_str(const Word& w, bool quantum = true) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t t = 0; t < w.size(); ++t) {
        if (t) s += ".";
        s += sym_name(w[t], quantum);
    }
    return s;
}

// Sparse free-algebra element: word -> coefficient.
class PolySym {
public:
    PolySym() = default;
    PolySym(PimenovElement c) { add(Word{}, std::move(c)); }

    static PolySym generator(SymId s, PimenovElement c = PimenovElement::one()) {
        PolySym p;
        p.add(Word{s}, std::move(c));
        return p;
    }

    const std::map<Word, PimenovElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, PimenovElement c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PolySym operator-() const {
        PolySym r;
        for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend PolySym operator+(const PolySym& x, const PolySym& y) {
        PolySym r = x;
        for (auto& [w, c] : y.terms_) r.add(w, c);
        return r;
    }
    friend PolySym operator-(const PolySym& x, const PolySym& y) { return x + (-y); }

    friend PolySym operator*(const PolySym& x, const PolySym& y) {
        PolySym r;
        for (auto& [wa, ca] : x.terms_)
            for (auto& [wb, cb] : y.terms_) {
                PimenovElement c = ca * cb;
                if (c.is_zero()) continue;
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(w, std::move(c));
            }
        return r;
    }

    friend PolySym operator*(const PimenovElement& c, const PolySym& x) {
        PolySym r;
        for (auto& [w, cw] : x.terms_) r.add(w, c * cw);
        return r;
    }

    PolySym& operator+=(const PolySym& o) { return *this = *this + o; }
    PolySym& operator-=(const PolySym& o) { return *this = *this - o; }
    PolySym& operator*=(const PolySym& o) { return *this = *this * o; }

    friend bool operator==(const PolySym& x, const PolySym& y) { return x.terms_ == y.terms_; }

    // Union of iota-monomial masks over all coefficients.
    std::vector<Mask> mask_support() const {
        std::map<Mask, bool> seen;
        for (auto& [w, c] : terms_)
            for (auto& [m, e] : c.components()) seen[m] = true;
        std::vector<Mask> out;
        for (auto& [m, b] : seen) out.push_back(m);
        return out;
    }

    // Split into iota-graded layers: each mask maps to the word polynomial
    // formed by that monomial's coefficients.
    std::map<Mask, std::map<Word, ExpPoly>> graded() const {
        std::map<Mask, std::map<Word, ExpPoly>> out;
        for (auto& [w, c] : terms_)
            for (auto& [m, e] : c.components()) out[m][w] = e;
        return out;
    }

    std::string str(bool quantum = true) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [w, c] : terms_) {
            if (!first) s += "  +  ";
            first = false;
            s += "(" + c.str() + ")*" + word_str(w, quantum);
        }
        return s;
    }

private:
    std::map<Word, PimenovElement> terms_;
};

inline PolySym classical_limit(const PolySym& p) {
    PolySym r;
    for (auto& [w, c] : p.terms()) r.add(w, classical_limit(c));
    return r;
}

} // namespace ckq
