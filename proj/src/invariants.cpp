#include "hahn/invariants.hpp"

#include <algorithm>
#include <set>

namespace hahn {

StepFunction StepFunction::constant(long long value) {
    StepFunction s;
    s.at_ = {value};
    s.after_ = {value};
    return s;
}

StepFunction StepFunction::half_open(Rational p) {
    if (!p.is_positive())
        throw std::invalid_argument("StepFunction::half_open: needs p > 0");
    StepFunction s;
    s.points_ = {Rational(0), p};
    s.at_ = {1, 0};
    s.after_ = {1, 0};
    return s;
}

StepFunction StepFunction::closed(Rational p) {
    if (p.is_negative())
        throw std::invalid_argument("StepFunction::closed: needs p >= 0");
    StepFunction s;
    if (p.is_zero()) {
        s.at_ = {1};
        s.after_ = {0};
        return s;
    }
    s.points_ = {Rational(0), p};
    s.at_ = {1, 1};
    s.after_ = {1, 0};
    return s;
}

long long StepFunction::value(Rational q) const {
    if (q.is_negative())
        throw std::domain_error("StepFunction::value: negative argument");
    auto it = std::upper_bound(points_.begin(), points_.end(), q);
    std::size_t i = static_cast<std::size_t>(it - points_.begin()) - 1;
    return points_[i] == q ? at_[i] : after_[i];
}

long long StepFunction::left_limit(Rational q) const {
    if (!q.is_positive())
        throw std::domain_error("StepFunction::left_limit: needs q > 0");
    auto it = std::lower_bound(points_.begin(), points_.end(), q);
    std::size_t i = static_cast<std::size_t>(it - points_.begin());
    return after_[i - 1];
}

long long StepFunction::right_limit(Rational q) const {
    if (q.is_negative())
        throw std::domain_error("StepFunction::right_limit: negative argument");
    auto it = std::upper_bound(points_.begin(), points_.end(), q);
    std::size_t i = static_cast<std::size_t>(it - points_.begin()) - 1;
    return after_[i];
}

long long StepFunction::tail() const { return after_.back(); }

StepFunction operator+(const StepFunction& a, const StepFunction& b) {
    StepFunction out;
    std::vector<Rational> pts = a.points_;
    pts.insert(pts.end(), b.points_.begin(), b.points_.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    out.points_ = pts;
    out.at_.clear();
    out.after_.clear();
    for (const Rational& p : pts) {
        out.at_.push_back(a.value(p) + b.value(p));
        out.after_.push_back(a.right_limit(p) + b.right_limit(p));
    }
    return out;
}

long long f_dim(const Multibasic& m) {
    const Multibasic field(StandardBasic::make(BasicKind::K));
    long long n = 0;
    for (const StandardBasic& b : m.summands())
        if (tensor(field, Multibasic(b)) == field)
            ++n;
    return n;
}

long long g_dim(const Multibasic& m) {
    const Multibasic residue(StandardBasic::make(BasicKind::F));
    long long n = 0;
    for (const StandardBasic& b : m.summands())
        if (tensor(residue, Multibasic(b)) == residue)
            ++n;
    return n;
}

StepFunction eta(const Multibasic& m) {
    // Summandwise: scaling by Iq(s) leaves A finitely generated for every s,
    // kills F for s > 0, and turns the length-q cyclic summands into shorter
    // ones that stay finitely generated up to (A/Iq) or through (A/Igt) their
    // parameter. All other kinds never contribute.
    StepFunction total;
    for (const StandardBasic& b : m.summands()) {
        switch (b.kind()) {
        case BasicKind::A: total = total + StepFunction::constant(1); break;
        case BasicKind::F: total = total + StepFunction::closed(Rational(0)); break;
        case BasicKind::AModIq: total = total + StepFunction::half_open(b.param()); break;
        case BasicKind::AModIgt: total = total + StepFunction::closed(b.param()); break;
        default: break;
        }
    }
    return total;
}

long long delta_plus(const StepFunction& s, Rational q) {
    if (!q.is_positive())
        throw std::domain_error("delta_plus: needs q > 0");
    return s.left_limit(q) - s.value(q);
}

long long delta_minus(const StepFunction& s, Rational q) {
    if (q.is_negative())
        throw std::domain_error("delta_minus: needs q >= 0");
    return s.value(q) - s.right_limit(q);
}

long long limit_at_infinity(const StepFunction& s) { return s.tail(); }

long long psi_count(const StandardBasic& target, const Multibasic& m) {
    const Multibasic maximal_ideal(StandardBasic::make(BasicKind::Igt0));
    switch (target.kind()) {
    case BasicKind::A:
        return limit_at_infinity(eta(m));
    case BasicKind::F:
        return delta_minus(eta(m), Rational(0));
    case BasicKind::AModIq:
        return delta_plus(eta(m), target.param());
    case BasicKind::AModIgt:
        return delta_minus(eta(m), target.param());
    case BasicKind::Theta:
        return psi_count(StandardBasic::make(BasicKind::A), dual(m));
    case BasicKind::Igt0ModIgt:
        return psi_count(StandardBasic::make(BasicKind::AModIq, target.param()), dual(m));
    case BasicKind::Igt0:
        return psi_count(StandardBasic::make(BasicKind::A), hom(maximal_ideal, m)) -
               psi_count(StandardBasic::make(BasicKind::A), m);
    case BasicKind::K:
        return f_dim(m) - psi_count(StandardBasic::make(BasicKind::A), m) -
               psi_count(StandardBasic::make(BasicKind::Igt0), m);
    case BasicKind::Phi:
        return psi_count(StandardBasic::make(BasicKind::Igt0), dual(m));
    case BasicKind::Igt0ModIq: {
        Rational q = target.param();
        return psi_count(StandardBasic::make(BasicKind::AModIq, q), hom(maximal_ideal, m)) -
               psi_count(StandardBasic::make(BasicKind::AModIq, q), m) -
               psi_count(StandardBasic::make(BasicKind::AModIgt, q), m) -
               psi_count(StandardBasic::make(BasicKind::Igt0ModIgt, q), m);
    }
    }
    throw std::logic_error("psi_count: unhandled kind");
}

InvariantReport decompose_report(const Multibasic& m) {
    InvariantReport report;
    report.flat_count = f_dim(m);
    report.finitely_generated_count = g_dim(m);

    std::set<Rational> params;
    for (const StandardBasic& b : m.summands())
        if (b.has_param())
            params.insert(b.param());

    auto record = [&](const StandardBasic& v) {
        long long n = psi_count(v, m);
        if (n != 0)
            report.multiplicities[v] = n;
    };
    for (BasicKind k : {BasicKind::K, BasicKind::A, BasicKind::Igt0, BasicKind::Theta,
                        BasicKind::Phi, BasicKind::F})
        record(StandardBasic::make(k));
    for (BasicKind k :
         {BasicKind::AModIq, BasicKind::AModIgt, BasicKind::Igt0ModIq, BasicKind::Igt0ModIgt})
        for (const Rational& q : params)
            record(StandardBasic::make(k, q));
    return report;
}

} // namespace hahn
