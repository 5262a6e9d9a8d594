#include "hahn/basic.hpp"

#include <algorithm>

namespace hahn {

KSubmodule StandardBasic::numerator() const {
    switch (kind_) {
    case BasicKind::K:
    case BasicKind::Theta:
    case BasicKind::Phi: return KSubmodule::full();
    case BasicKind::A:
    case BasicKind::F:
    case BasicKind::AModIq:
    case BasicKind::AModIgt: return KSubmodule::geq(Rational(0));
    case BasicKind::Igt0:
    case BasicKind::Igt0ModIq:
    case BasicKind::Igt0ModIgt: return KSubmodule::gt(Rational(0));
    }
    return KSubmodule::zero();
}

KSubmodule StandardBasic::denominator() const {
    switch (kind_) {
    case BasicKind::K:
    case BasicKind::A:
    case BasicKind::Igt0: return KSubmodule::zero();
    case BasicKind::Theta:
    case BasicKind::F: return KSubmodule::gt(Rational(0));
    case BasicKind::Phi: return KSubmodule::geq(Rational(0));
    case BasicKind::AModIq:
    case BasicKind::Igt0ModIq: return KSubmodule::geq(q_);
    case BasicKind::AModIgt:
    case BasicKind::Igt0ModIgt: return KSubmodule::gt(q_);
    }
    return KSubmodule::zero();
}

std::string StandardBasic::to_string() const {
    switch (kind_) {
    case BasicKind::K: return "K";
    case BasicKind::A: return "A";
    case BasicKind::Igt0: return "Igt0";
    case BasicKind::Theta: return "Theta";
    case BasicKind::Phi: return "Phi";
    case BasicKind::F: return "F";
    case BasicKind::AModIq: return "A/Iq(" + q_.to_string() + ")";
    case BasicKind::AModIgt: return "A/Igt(" + q_.to_string() + ")";
    case BasicKind::Igt0ModIq: return "Igt0/Iq(" + q_.to_string() + ")";
    case BasicKind::Igt0ModIgt: return "Igt0/Igt(" + q_.to_string() + ")";
    }
    return {};
}

Multibasic::Multibasic(std::vector<StandardBasic> summands) : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
}

Multibasic& Multibasic::add_summand(const StandardBasic& b) {
    summands_.insert(std::upper_bound(summands_.begin(), summands_.end(), b), b);
    return *this;
}

Multibasic direct_sum(const Multibasic& a, const Multibasic& b) {
    std::vector<StandardBasic> all = a.summands_;
    all.insert(all.end(), b.summands_.begin(), b.summands_.end());
    return Multibasic(std::move(all));
}

std::string Multibasic::to_string() const {
    if (summands_.empty())
        return "0";
    std::string s;
    for (const StandardBasic& b : summands_) {
        if (!s.empty())
            s += " + ";
        s += b.to_string();
    }
    return s;
}

std::optional<StandardBasic> normalize_subquotient(const KSubmodule& numerator,
                                                   const KSubmodule& denominator) {
    if (numerator == denominator)
        return std::nullopt;
    if (numerator < denominator)
        throw std::invalid_argument("normalize_subquotient: denominator exceeds numerator");

    using Kind = KSubmodule::Kind;
    if (numerator.is_full()) {
        switch (denominator.kind()) {
        case Kind::zero: return StandardBasic::make(BasicKind::K);
        case Kind::gt: return StandardBasic::make(BasicKind::Theta);
        case Kind::geq: return StandardBasic::make(BasicKind::Phi);
        default: break;
        }
    }
    // Shift both sides by the numerator's index; the class is shift-invariant.
    Rational s = numerator.index();
    KSubmodule den = denominator.shifted(-s);
    if (numerator.kind() == Kind::geq) {
        switch (den.kind()) {
        case Kind::zero: return StandardBasic::make(BasicKind::A);
        case Kind::geq: return StandardBasic::make(BasicKind::AModIq, den.index());
        case Kind::gt:
            return den.index().is_zero() ? StandardBasic::make(BasicKind::F)
                                         : StandardBasic::make(BasicKind::AModIgt, den.index());
        default: break;
        }
    }
    switch (den.kind()) {
    case Kind::zero: return StandardBasic::make(BasicKind::Igt0);
    case Kind::geq: return StandardBasic::make(BasicKind::Igt0ModIq, den.index());
    case Kind::gt: return StandardBasic::make(BasicKind::Igt0ModIgt, den.index());
    default: break;
    }
    throw std::invalid_argument("normalize_subquotient: invalid presentation");
}

StandardBasic normalize_presentation(const KSubmodule& numerator, const KSubmodule& denominator) {
    auto b = normalize_subquotient(numerator, denominator);
    if (!b)
        throw std::invalid_argument("normalize_presentation: zero quotient");
    return *b;
}

bool is_flat(const Multibasic& m) {
    return std::all_of(m.summands().begin(), m.summands().end(),
                       [](const StandardBasic& b) { return b.is_flat(); });
}

bool is_injective(const Multibasic& m) {
    return std::all_of(m.summands().begin(), m.summands().end(),
                       [](const StandardBasic& b) { return b.is_injective(); });
}

bool is_t_divisible(const Multibasic& m) {
    for (const StandardBasic& b : m.summands()) {
        KSubmodule u = b.numerator();
        KSubmodule tu = lattice_max(product(KSubmodule::geq(Rational(1)), u), b.denominator());
        if (tu != u)
            return false;
    }
    return true;
}

StandardBasic injective_hull(const StandardBasic& b) {
    return normalize_presentation(KSubmodule::full(), b.denominator());
}

InjectiveResolution injective_resolution(const Multibasic& m) {
    Multibasic hull, quotient;
    for (const StandardBasic& b : m.summands()) {
        hull.add_summand(normalize_presentation(KSubmodule::full(), b.denominator()));
        if (auto q = normalize_subquotient(KSubmodule::full(), b.numerator()))
            quotient.add_summand(*q);
    }
    return {m, hull, quotient};
}

Multibasic scale(Rational q, const Multibasic& m, bool strict) {
    if (q.is_negative())
        throw std::invalid_argument("scale: negative index");
    KSubmodule ideal = strict ? KSubmodule::gt(q) : KSubmodule::geq(q);
    Multibasic out;
    for (const StandardBasic& b : m.summands()) {
        KSubmodule num = lattice_max(product(ideal, b.numerator()), b.denominator());
        if (auto s = normalize_subquotient(num, b.denominator()))
            out.add_summand(*s);
    }
    return out;
}

Multibasic ann_submodule(const KSubmodule& ideal, const Multibasic& m) {
    if (!ideal.is_ideal_of_ring())
        throw std::invalid_argument("ann_submodule: not an ideal of the ring");
    Multibasic out;
    for (const StandardBasic& b : m.summands()) {
        KSubmodule num = lattice_min(b.numerator(), colon(b.denominator(), ideal));
        if (auto s = normalize_subquotient(num, b.denominator()))
            out.add_summand(*s);
    }
    return out;
}

Multibasic ann_t(const Multibasic& m) {
    return ann_submodule(KSubmodule::geq(Rational(1)), m);
}

} // namespace hahn
