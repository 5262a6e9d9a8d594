#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hahn/lattice.hpp"

namespace hahn {

// The ten standard basic modules. Kind order follows the classification
// table; it fixes the canonical sort used for structural equality.
enum class BasicKind {
    K,           // the Hahn field
    A,           // the Hahn ring
    Igt0,        // the maximal ideal
    Theta,       // K/Igt(0), the dualizing module
    Phi,         // K/A
    F,           // A/Igt(0), the residue field
    AModIq,      // A/Iq(q), q > 0
    AModIgt,     // A/Igt(q), q > 0
    Igt0ModIq,   // Igt0/Iq(q), q > 0
    Igt0ModIgt,  // Igt0/Igt(q), q > 0
};

inline bool kind_has_param(BasicKind k) { return k >= BasicKind::AModIq; }

class StandardBasic {
public:
    static StandardBasic make(BasicKind kind) {
        if (kind_has_param(kind))
            throw std::invalid_argument("StandardBasic: kind requires a parameter");
        return StandardBasic(kind, Rational(0));
    }
    static StandardBasic make(BasicKind kind, Rational q) {
        if (!kind_has_param(kind))
            throw std::invalid_argument("StandardBasic: kind takes no parameter");
        if (!q.is_positive())
            throw std::invalid_argument("StandardBasic: parameter must be positive");
        return StandardBasic(kind, q);
    }

    BasicKind kind() const { return kind_; }
    bool has_param() const { return kind_has_param(kind_); }
    Rational param() const {
        if (!has_param())
            throw std::domain_error("StandardBasic: no parameter");
        return q_;
    }

    // Canonical presentation as a subquotient numerator/denominator.
    KSubmodule numerator() const;
    KSubmodule denominator() const;

    bool is_flat() const {
        return kind_ == BasicKind::K || kind_ == BasicKind::A || kind_ == BasicKind::Igt0;
    }
    bool is_injective() const {
        return kind_ == BasicKind::K || kind_ == BasicKind::Theta || kind_ == BasicKind::Phi;
    }
    bool is_finitely_generated() const {
        return kind_ == BasicKind::A || kind_ == BasicKind::F || kind_ == BasicKind::AModIq ||
               kind_ == BasicKind::AModIgt;
    }
    // Length of the module; nullopt means infinite.
    std::optional<Rational> length() const {
        if (kind_ == BasicKind::F)
            return Rational(0);
        if (has_param())
            return q_;
        return std::nullopt;
    }

    friend bool operator==(const StandardBasic&, const StandardBasic&) = default;
    friend std::strong_ordering operator<=>(const StandardBasic& a, const StandardBasic& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0)
            return c;
        return a.q_ <=> b.q_;
    }

    std::string to_string() const;

private:
    StandardBasic(BasicKind kind, Rational q) : kind_(kind), q_(q) {}

    BasicKind kind_;
    Rational q_; // positive for parameterized kinds, 0 otherwise
};

// A finite multiset of standard basic summands held in canonical sorted
// order. Two multibasic modules are isomorphic exactly when their canonical
// forms are equal, so operator== decides isomorphism.
class Multibasic {
public:
    Multibasic() = default;
    explicit Multibasic(std::vector<StandardBasic> summands);
    Multibasic(std::initializer_list<StandardBasic> summands)
        : Multibasic(std::vector<StandardBasic>(summands)) {}
    explicit Multibasic(StandardBasic single) : summands_{single} {}

    static Multibasic zero() { return {}; }

    const std::vector<StandardBasic>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }
    std::size_t summand_count() const { return summands_.size(); }

    Multibasic& add_summand(const StandardBasic& b);
    friend Multibasic direct_sum(const Multibasic& a, const Multibasic& b);
    friend bool operator==(const Multibasic&, const Multibasic&) = default;

    std::string to_string() const;

private:
    std::vector<StandardBasic> summands_; // sorted
};

// Classifies the subquotient numerator/denominator: shift by the finite index
// of the numerator and read off the standard basic module. Returns nullopt
// for the zero quotient (numerator == denominator); throws std::invalid_argument
// when the denominator is not contained in the numerator.
std::optional<StandardBasic> normalize_subquotient(const KSubmodule& numerator,
                                                   const KSubmodule& denominator);

// Same, but the presentation must be of a nonzero module.
StandardBasic normalize_presentation(const KSubmodule& numerator, const KSubmodule& denominator);

bool is_flat(const Multibasic& m);
bool is_injective(const Multibasic& m);

// Whether multiplication by t is surjective (tM = M, computed summandwise on
// the canonical presentations). Together with the representability of every
// map from the maximal ideal, this characterizes the injectives; here it holds
// exactly on sums whose summands have numerator K.
bool is_t_divisible(const Multibasic& m);

// Injective hull of a basic subquotient: K over the same denominator.
StandardBasic injective_hull(const StandardBasic& b);

// Length-two injective resolution 0 -> M -> hull -> quotient -> 0 assembled
// summandwise from K/V and K/U, with zero terms dropped.
struct InjectiveResolution {
    Multibasic module;
    Multibasic hull;
    Multibasic quotient;
};
InjectiveResolution injective_resolution(const Multibasic& m);

// Iq(q).M (or Igt(q).M when strict), computed summandwise on presentations.
Multibasic scale(Rational q, const Multibasic& m, bool strict = false);

// ann(J, M) = {m : Jm = 0} for an ideal J of the ring.
Multibasic ann_submodule(const KSubmodule& ideal, const Multibasic& m);

// The t-torsion ann(t, M); empty exactly when M is flat.
Multibasic ann_t(const Multibasic& m);

} // namespace hahn
