#include "hahn/dvr.hpp"

#include <algorithm>
#include <optional>

namespace hahn::dvr {

std::string DvrBasic::to_string() const {
    switch (kind_) {
    case DvrKind::K: return "K";
    case DvrKind::A: return "A";
    case DvrKind::Theta: return "Theta";
    case DvrKind::Torsion: return "A/In(" + std::to_string(n_) + ")";
    }
    return {};
}

DvrMultibasic::DvrMultibasic(std::vector<DvrBasic> summands) : summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
}

DvrMultibasic& DvrMultibasic::add_summand(const DvrBasic& b) {
    summands_.insert(std::upper_bound(summands_.begin(), summands_.end(), b), b);
    return *this;
}

std::string DvrMultibasic::to_string() const {
    if (summands_.empty())
        return "0";
    std::string s;
    for (const DvrBasic& b : summands_) {
        if (!s.empty())
            s += " + ";
        s += b.to_string();
    }
    return s;
}

namespace {

std::optional<DvrBasic> hom_basic(const DvrBasic& m, const DvrBasic& n) {
    using K = DvrKind;
    switch (m.kind()) {
    case K::K:
        return (n.kind() == K::K || n.kind() == K::Theta) ? std::optional(DvrBasic::field())
                                                          : std::nullopt;
    case K::A:
        return n; // Hom(A, N) = N
    case K::Theta:
        return n.kind() == K::Theta ? std::optional(DvrBasic::ring()) : std::nullopt;
    case K::Torsion:
        if (n.kind() == K::Theta)
            return DvrBasic::torsion(m.length());
        if (n.kind() == K::Torsion)
            return DvrBasic::torsion(std::min(m.length(), n.length()));
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<DvrBasic> tensor_basic(const DvrBasic& m, const DvrBasic& n) {
    using K = DvrKind;
    if (m.kind() == K::A)
        return n;
    if (n.kind() == K::A)
        return m;
    if (m.kind() == K::K)
        return n.kind() == K::K ? std::optional(DvrBasic::field()) : std::nullopt;
    if (n.kind() == K::K)
        return std::nullopt; // m is Theta or torsion here
    if (m.kind() == K::Torsion && n.kind() == K::Torsion)
        return DvrBasic::torsion(std::min(m.length(), n.length()));
    return std::nullopt; // any pairing with Theta vanishes
}

DvrBasic dual_basic(const DvrBasic& b) {
    switch (b.kind()) {
    case DvrKind::K: return DvrBasic::field();
    case DvrKind::A: return DvrBasic::theta();
    case DvrKind::Theta: return DvrBasic::ring();
    case DvrKind::Torsion: return b;
    }
    return b;
}

} // namespace

DvrMultibasic dvr_hom(const DvrMultibasic& m, const DvrMultibasic& n) {
    DvrMultibasic out;
    for (const DvrBasic& a : m.summands())
        for (const DvrBasic& b : n.summands())
            if (auto h = hom_basic(a, b))
                out.add_summand(*h);
    return out;
}

DvrMultibasic dvr_tensor(const DvrMultibasic& m, const DvrMultibasic& n) {
    DvrMultibasic out;
    for (const DvrBasic& a : m.summands())
        for (const DvrBasic& b : n.summands())
            if (auto t = tensor_basic(a, b))
                out.add_summand(*t);
    return out;
}

DvrMultibasic dvr_dual(const DvrMultibasic& m) {
    DvrMultibasic out;
    for (const DvrBasic& b : m.summands())
        out.add_summand(dual_basic(b));
    return out;
}

std::string DvrAnnihilator::to_string() const {
    switch (kind) {
    case Kind::whole_ring: return "A";
    case Kind::zero_ideal: return "0";
    case Kind::power: return "I" + std::to_string(index);
    }
    return {};
}

DvrInvariants dvr_invariants(const DvrMultibasic& m) {
    DvrInvariants inv;
    bool faithful_summand = false;
    long long max_torsion = 0;
    for (const DvrBasic& b : m.summands()) {
        switch (b.kind()) {
        case DvrKind::K:
            inv.dim_k_tensor += 1;
            inv.dim_k_tensor_dual += 1;
            faithful_summand = true;
            break;
        case DvrKind::A:
            inv.dim_k_tensor += 1;
            inv.dim_f_tensor += 1;
            faithful_summand = true;
            break;
        case DvrKind::Theta:
            inv.dim_k_tensor_dual += 1;
            inv.dim_f_tensor_dual += 1;
            faithful_summand = true;
            break;
        case DvrKind::Torsion:
            inv.dim_f_tensor += 1;
            inv.dim_f_tensor_dual += 1;
            max_torsion = std::max(max_torsion, b.length());
            break;
        }
    }
    if (faithful_summand)
        inv.annihilator = {DvrAnnihilator::Kind::zero_ideal, 0};
    else if (max_torsion > 0)
        inv.annihilator = {DvrAnnihilator::Kind::power, max_torsion};
    else
        inv.annihilator = {DvrAnnihilator::Kind::whole_ring, 0};
    return inv;
}

} // namespace hahn::dvr
