#include "hahn/root_algebra.hpp"

namespace hahn {

namespace {

const Rational kOne(1);

PResolution::MapLabel label(PResolution::MapLabel::Tag tag, Rational q = Rational(0)) {
    return {tag, q};
}

} // namespace

StandardBasic p_ring() { return StandardBasic::make(BasicKind::AModIgt, kOne); }
StandardBasic q_cogenerator() { return StandardBasic::make(BasicKind::AModIq, kOne); }

bool is_truncated(const StandardBasic& b) {
    return scale(kOne, Multibasic(b), /*strict=*/true).is_zero();
}

bool is_truncated(const Multibasic& m) {
    for (const StandardBasic& b : m.summands())
        if (!is_truncated(b))
            return false;
    return true;
}

Multibasic p_dual(const Multibasic& m) {
    if (!is_truncated(m))
        throw std::invalid_argument("p_dual: module is not truncated");
    return dual(m);
}

bool is_injective_p(const Multibasic& m) {
    if (!is_truncated(m))
        throw std::invalid_argument("is_injective_p: module is not truncated");
    for (const StandardBasic& b : m.summands())
        if (b != p_ring() && b != q_cogenerator())
            return false;
    return true;
}

std::string PResolution::MapLabel::to_string() const {
    switch (tag) {
    case Tag::alpha: return "alpha";
    case Tag::beta: return "beta";
    case Tag::alpha_q: return "alpha(" + param.to_string() + ")";
    case Tag::beta_q: return "beta(" + param.to_string() + ")";
    case Tag::gamma_q: return "gamma(" + param.to_string() + ")";
    case Tag::delta_q: return "delta(" + param.to_string() + ")";
    case Tag::quotient: return "quot";
    }
    return {};
}

PResolution p_injective_resolution(const StandardBasic& b) {
    using Term = PResolution::Term;
    using Tag = PResolution::MapLabel::Tag;
    if (!is_truncated(b))
        throw std::invalid_argument("p_injective_resolution: module is not truncated");

    PResolution res;
    auto finite = [&](std::vector<Term> terms, std::vector<PResolution::MapLabel> maps) {
        res.terms = std::move(terms);
        res.maps = std::move(maps);
        res.period_start = std::min<std::size_t>(2, res.terms.size());
        res.finite = true;
        return res;
    };
    // Shared periodic tail: once the cokernel is a cyclic length-s module
    // embedded in Q, the resolution alternates through Q with the two
    // complementary-length splice maps.
    auto periodic = [&](std::vector<Term> head, std::vector<PResolution::MapLabel> maps,
                        Rational first_tail_param) {
        res.terms = std::move(head);
        res.maps = std::move(maps);
        res.period_start = res.terms.size();
        Rational a = first_tail_param, bq = kOne - first_tail_param;
        for (int i = 0; i < 4; ++i) {
            res.terms.push_back(Term::Q);
            res.maps.push_back(label(Tag::alpha_q, i % 2 == 0 ? a : bq));
        }
        res.maps.pop_back(); // maps has one entry fewer than terms
        res.finite = false;
        return res;
    };

    switch (b.kind()) {
    case BasicKind::F:
        return finite({Term::P, Term::Q}, {label(Tag::quotient)});
    case BasicKind::AModIq: {
        Rational q = b.param();
        if (q == kOne)
            return finite({Term::Q}, {}); // Q itself is injective
        // 0 -> A/Iq(q) -> Q -> A/Iq(1-q) -> 0, then splice through Q forever.
        return periodic({}, {}, kOne - q);
    }
    case BasicKind::AModIgt: {
        Rational q = b.param();
        if (q == kOne)
            return finite({Term::P}, {}); // the ring is self-injective
        // 0 -> A/Igt(q) -> P -> A/Iq(1-q) -> 0.
        return periodic({Term::P}, {label(Tag::beta_q, kOne - q)}, b.param());
    }
    case BasicKind::Igt0ModIq: {
        Rational q = b.param();
        if (q == kOne)
            return finite({Term::Q, Term::P, Term::Q},
                          {label(Tag::alpha), label(Tag::quotient)});
        // 0 -> Igt0/Iq(q) -> Q -> A/Igt(1-q) -> 0, then through P.
        return periodic({Term::Q, Term::P},
                        {label(Tag::gamma_q, kOne - q), label(Tag::beta_q, q)}, kOne - q);
    }
    case BasicKind::Igt0ModIgt: {
        Rational q = b.param();
        if (q == kOne)
            return finite({Term::P, Term::P, Term::Q},
                          {label(Tag::beta), label(Tag::quotient)});
        // 0 -> Igt0/Igt(q) -> P -> A/Igt(1-q) -> 0, then through P.
        return periodic({Term::P, Term::P},
                        {label(Tag::delta_q, kOne - q), label(Tag::beta_q, q)}, kOne - q);
    }
    default:
        throw std::logic_error("p_injective_resolution: unreachable kind");
    }
}

bool ext_periodicity_check(const StandardBasic& b) {
    PResolution res = p_injective_resolution(b);
    for (std::size_t i = res.period_start; i + 2 < res.terms.size(); ++i) {
        if (res.terms[i + 2] != res.terms[i])
            return false;
        if (i + 2 < res.maps.size() && res.maps[i + 2] != res.maps[i])
            return false;
    }
    return true;
}

IncoherenceWitness incoherence_witness(Rational q) {
    if (q.is_negative() || q > kOne)
        throw std::invalid_argument("incoherence_witness: q must lie in [0, 1]");
    auto kernel = normalize_subquotient(KSubmodule::gt(kOne - q), KSubmodule::gt(kOne));
    Multibasic kernel_class = kernel ? Multibasic(*kernel) : Multibasic::zero();
    return {kernel_class, q.is_zero()};
}

} // namespace hahn
