#pragma once

#include <map>

#include "hahn/functors.hpp"

namespace hahn {

// An integer-valued function on [0, infinity) that is constant away from a
// finite set of rational breakpoints. The value AT a breakpoint may differ
// from the value on the open intervals to either side, so both one-sided
// limits are exact; this is what the jump extractors below need.
class StepFunction {
public:
    // Constant zero.
    StepFunction() = default;

    static StepFunction constant(long long value);
    // Indicator of [0, p) for p > 0.
    static StepFunction half_open(Rational p);
    // Indicator of [0, p] for p >= 0; p = 0 gives the indicator of {0}.
    static StepFunction closed(Rational p);

    long long value(Rational q) const;      // q >= 0
    long long left_limit(Rational q) const; // q > 0
    long long right_limit(Rational q) const;
    long long tail() const; // value near +infinity

    const std::vector<Rational>& breakpoints() const { return points_; }

    friend StepFunction operator+(const StepFunction& a, const StepFunction& b);
    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    // points_ is sorted and starts with 0. at_[i] is the value at points_[i];
    // after_[i] the value on the open interval up to the next breakpoint
    // (after_.back() is the tail).
    std::vector<Rational> points_{Rational(0)};
    std::vector<long long> at_{0};
    std::vector<long long> after_{0};
};

// Number of flat summands: the dimension over the field of the field-tensor.
long long f_dim(const Multibasic& m);

// Number of finitely generated summands: the dimension of the residue-field
// tensor.
long long g_dim(const Multibasic& m);

// q -> g_dim(scale(q, M)), assembled symbolically so jumps are exact.
StepFunction eta(const Multibasic& m);

long long delta_plus(const StepFunction& s, Rational q);  // left limit - value, q > 0
long long delta_minus(const StepFunction& s, Rational q); // value - right limit, q >= 0
long long limit_at_infinity(const StepFunction& s);

// Multiplicity of the standard basic in the canonical decomposition,
// evaluated through the counting formulas (eta jumps, duals and
// hom-from-the-maximal-ideal corrections), not by reading the multiset.
long long psi_count(const StandardBasic& target, const Multibasic& m);

struct InvariantReport {
    long long flat_count = 0;
    long long finitely_generated_count = 0;
    std::map<StandardBasic, long long> multiplicities;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// Full report computed via psi_count for every kind present (parameterized
// kinds probed at the parameters occurring in M). Reconstructs the multiset.
InvariantReport decompose_report(const Multibasic& m);

} // namespace hahn
