#include "hahn/lattice.hpp"

namespace hahn {

std::string KSubmodule::to_string() const {
    switch (kind_) {
    case Kind::zero: return "0";
    case Kind::full: return "K";
    case Kind::geq: return "Iq(" + q_.to_string() + ")";
    case Kind::gt: return "Igt(" + q_.to_string() + ")";
    }
    return {};
}

KSubmodule product(const KSubmodule& u, const KSubmodule& v) {
    using Kind = KSubmodule::Kind;
    if (u.is_zero() || v.is_zero())
        return KSubmodule::zero();
    if (u.is_full() || v.is_full())
        return KSubmodule::full();
    Rational s = u.index() + v.index();
    bool strict = u.kind() == Kind::gt || v.kind() == Kind::gt;
    return strict ? KSubmodule::gt(s) : KSubmodule::geq(s);
}

KSubmodule colon(const KSubmodule& u, const KSubmodule& v) {
    using Kind = KSubmodule::Kind;
    if (v.is_zero())
        return KSubmodule::full();
    if (u.is_full())
        return KSubmodule::full();
    if (u.is_zero())
        return KSubmodule::zero();
    if (v.is_full())
        return KSubmodule::zero();
    Rational d = u.index() - v.index();
    // (Iq(p):Iq(q)) = Iq(p-q), (Igt(p):Iq(q)) = Igt(p-q),
    // (Iq(p):Igt(q)) = Iq(p-q), (Igt(p):Igt(q)) = Iq(p-q).
    bool strict = u.kind() == Kind::gt && v.kind() == Kind::geq;
    return strict ? KSubmodule::gt(d) : KSubmodule::geq(d);
}

KSubmodule circle(const KSubmodule& v) {
    using Kind = KSubmodule::Kind;
    switch (v.kind()) {
    case Kind::zero: return KSubmodule::full();
    case Kind::full: return KSubmodule::zero();
    case Kind::geq: return KSubmodule::gt(-v.index());
    case Kind::gt: return KSubmodule::geq(-v.index());
    }
    return KSubmodule::zero();
}

} // namespace hahn
