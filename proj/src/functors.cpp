#include "hahn/functors.hpp"

namespace hahn {

namespace {

struct Presentation {
    KSubmodule num;
    KSubmodule den;
};

Presentation pres(const StandardBasic& b) { return {b.numerator(), b.denominator()}; }

template <typename Fn>
Multibasic bilinear(const Multibasic& m, const Multibasic& n, Fn&& on_pair) {
    Multibasic out;
    for (const StandardBasic& a : m.summands())
        for (const StandardBasic& b : n.summands())
            if (auto s = on_pair(a, b))
                out.add_summand(*s);
    return out;
}

} // namespace

std::optional<StandardBasic> dual_basic(const StandardBasic& b) {
    auto [num, den] = pres(b);
    return normalize_subquotient(circle(den), circle(num));
}

std::optional<StandardBasic> tensor_basic(const StandardBasic& a, const StandardBasic& b) {
    auto [l0, n0] = pres(a);
    auto [l1, n1] = pres(b);
    return normalize_subquotient(product(l0, l1),
                                 lattice_max(product(l0, n1), product(n0, l1)));
}

std::optional<StandardBasic> hom_basic(const StandardBasic& a, const StandardBasic& b) {
    auto [l0, n0] = pres(a);
    auto [l1, n1] = pres(b);
    return normalize_subquotient(lattice_min(colon(l1, l0), colon(n1, n0)), colon(n1, l0));
}

std::optional<StandardBasic> tor_basic(const StandardBasic& a, const StandardBasic& b) {
    auto [l0, n0] = pres(a);
    auto [l1, n1] = pres(b);
    return normalize_subquotient(lattice_min(product(n0, l1), product(l0, n1)),
                                 product(n0, n1));
}

std::optional<StandardBasic> ext_basic(const StandardBasic& a, const StandardBasic& b) {
    auto [l0, n0] = pres(a);
    auto [l1, n1] = pres(b);
    return normalize_subquotient(colon(l1, n0), lattice_max(colon(l1, l0), colon(n1, n0)));
}

Multibasic dual(const Multibasic& m) {
    Multibasic out;
    for (const StandardBasic& b : m.summands())
        if (auto d = dual_basic(b))
            out.add_summand(*d);
    return out;
}

Multibasic tensor(const Multibasic& m, const Multibasic& n) {
    return bilinear(m, n, [](const auto& a, const auto& b) { return tensor_basic(a, b); });
}

Multibasic hom(const Multibasic& m, const Multibasic& n) {
    return bilinear(m, n, [](const auto& a, const auto& b) { return hom_basic(a, b); });
}

Multibasic tor(const Multibasic& m, const Multibasic& n) {
    return bilinear(m, n, [](const auto& a, const auto& b) { return tor_basic(a, b); });
}

Multibasic ext(const Multibasic& m, const Multibasic& n) {
    return bilinear(m, n, [](const auto& a, const auto& b) { return ext_basic(a, b); });
}

Multibasic higher(Functor f, int degree, const Multibasic&, const Multibasic&) {
    if (f != Functor::tor && f != Functor::ext)
        throw std::invalid_argument("higher: only tor and ext have higher degrees");
    if (degree < 2)
        throw std::invalid_argument("higher: degree must be >= 2");
    return Multibasic::zero();
}

std::string functor_name(Functor f) {
    switch (f) {
    case Functor::dual: return "dual";
    case Functor::tensor: return "tensor";
    case Functor::hom: return "hom";
    case Functor::tor: return "tor";
    case Functor::ext: return "ext";
    }
    return {};
}

} // namespace hahn
