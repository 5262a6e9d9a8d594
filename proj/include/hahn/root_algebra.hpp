#pragma once

#include "hahn/functors.hpp"

namespace hahn {

// The quotient ring by Igt(1). Its modules are exactly the truncated
// multibasics: those killed by Igt(1). The two indecomposable injectives are
// the ring itself and the cyclic module of length 1.
StandardBasic p_ring();    // A/Igt(1)
StandardBasic q_cogenerator(); // A/Iq(1)

bool is_truncated(const StandardBasic& b);
bool is_truncated(const Multibasic& m); // the P-module predicate

// Duality restricted to truncated modules; rejects anything else.
Multibasic p_dual(const Multibasic& m);

bool is_injective_p(const Multibasic& m);

// Shape of an injective resolution over the quotient ring: the terms are
// copies of P or Q, maps carry the labels of the four cyclic-splice families,
// and past `period_start` the tail repeats with period 2. `finite` marks
// resolutions that genuinely stop (the stored prefix is the whole thing);
// otherwise the stored prefix shows at least two full periods.
struct PResolution {
    enum class Term { P, Q };
    struct MapLabel {
        enum class Tag { alpha, beta, alpha_q, beta_q, gamma_q, delta_q, quotient };
        Tag tag;
        Rational param; // for the _q families

        friend bool operator==(const MapLabel&, const MapLabel&) = default;
        std::string to_string() const;
    };

    std::vector<Term> terms;
    std::vector<MapLabel> maps; // maps[i] goes terms[i] -> terms[i+1]
    std::size_t period_start = 0;
    bool finite = false;
};

PResolution p_injective_resolution(const StandardBasic& b);

// Verifies term(i+2) = term(i) and map-label(i+2) = map-label(i) across the
// stored tail of the resolution.
bool ext_periodicity_check(const StandardBasic& b);

// The kernel class of the surjection from the ring onto the ideal Iq(q)/Igt(1),
// and whether that ideal is finitely presented (only at q = 0, where the
// ideal is the whole ring): for q > 0 the kernel is not finitely generated,
// so the ring has no non-trivial finitely presented ideals.
struct IncoherenceWitness {
    Multibasic kernel;
    bool finitely_presented;
};
IncoherenceWitness incoherence_witness(Rational q);

} // namespace hahn
