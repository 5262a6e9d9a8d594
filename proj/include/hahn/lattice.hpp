#pragma once

#include <compare>
#include <string>

#include "hahn/rational.hpp"

namespace hahn {

// A submodule of the Hahn field over its valuation ring: one of 0, the whole
// field, I_q (valuation >= q) or I_{>q} (valuation > q), with q any rational.
// Totally ordered by inclusion:
//   0 < Igt(q) < Iq(q) < Igt(p) < Iq(p) < K   whenever p < q.
class KSubmodule {
public:
    enum class Kind { zero, gt, geq, full };

    static KSubmodule zero() { return KSubmodule(Kind::zero, Rational(0)); }
    static KSubmodule full() { return KSubmodule(Kind::full, Rational(0)); }
    static KSubmodule geq(Rational q) { return KSubmodule(Kind::geq, q); }
    static KSubmodule gt(Rational q) { return KSubmodule(Kind::gt, q); }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::zero; }
    bool is_full() const { return kind_ == Kind::full; }
    bool has_index() const { return kind_ == Kind::geq || kind_ == Kind::gt; }
    Rational index() const {
        if (!has_index())
            throw std::domain_error("KSubmodule: no finite index");
        return q_;
    }

    friend bool operator==(const KSubmodule&, const KSubmodule&) = default;

    // Containment order.
    friend std::strong_ordering operator<=>(const KSubmodule& a, const KSubmodule& b) {
        if (auto c = rank(a.kind_) <=> rank(b.kind_); c != 0 || !a.has_index())
            return c;
        if (auto c = b.q_ <=> a.q_; c != 0) // smaller index = bigger submodule
            return c;
        return strictness(a.kind_) <=> strictness(b.kind_);
    }

    // Multiplication by t^s.
    KSubmodule shifted(Rational s) const {
        if (!has_index())
            return *this;
        return KSubmodule(kind_, q_ + s);
    }

    bool is_ideal_of_ring() const {
        switch (kind_) {
        case Kind::zero: return true;
        case Kind::full: return false;
        default: return !q_.is_negative();
        }
    }

    // "0", "K", "Iq(q)" or "Igt(q)".
    std::string to_string() const;

private:
    KSubmodule(Kind k, Rational q) : kind_(k), q_(q) {}

    static int rank(Kind k) {
        switch (k) {
        case Kind::zero: return 0;
        case Kind::full: return 2;
        default: return 1;
        }
    }
    static int strictness(Kind k) { return k == Kind::gt ? 0 : 1; }

    Kind kind_;
    Rational q_; // meaningful for gt/geq only
};

inline KSubmodule lattice_max(const KSubmodule& a, const KSubmodule& b) {
    return a < b ? b : a; // sum of submodules
}
inline KSubmodule lattice_min(const KSubmodule& a, const KSubmodule& b) {
    return a < b ? a : b; // intersection of submodules
}

// Pointwise product UV = {uv}.
KSubmodule product(const KSubmodule& u, const KSubmodule& v);

// Colon submodule (U : V) = {a : aV <= U}.
KSubmodule colon(const KSubmodule& u, const KSubmodule& v);

// The circle dual V° = (Igt(0) : V); an inclusion-reversing involution.
KSubmodule circle(const KSubmodule& v);

} // namespace hahn
