#include "hahn/series.hpp"

#include <algorithm>

namespace hahn {

FiniteSeries FiniteSeries::from_exponents(std::vector<Rational> exponents) {
    std::sort(exponents.begin(), exponents.end());
    FiniteSeries s;
    std::size_t i = 0;
    while (i < exponents.size()) {
        std::size_t j = i;
        while (j < exponents.size() && exponents[j] == exponents[i])
            ++j;
        if ((j - i) % 2 == 1)
            s.support_.push_back(exponents[i]);
        i = j;
    }
    return s;
}

FiniteSeries operator+(const FiniteSeries& a, const FiniteSeries& b) {
    FiniteSeries out;
    out.support_.reserve(a.support_.size() + b.support_.size());
    std::set_symmetric_difference(a.support_.begin(), a.support_.end(), b.support_.begin(),
                                  b.support_.end(), std::back_inserter(out.support_));
    return out;
}

FiniteSeries operator*(const FiniteSeries& a, const FiniteSeries& b) {
    std::vector<Rational> sums;
    sums.reserve(a.support_.size() * b.support_.size());
    for (const Rational& u : a.support_)
        for (const Rational& v : b.support_)
            sums.push_back(u + v);
    return FiniteSeries::from_exponents(std::move(sums));
}

FiniteSeries FiniteSeries::shifted(Rational q) const {
    FiniteSeries out;
    out.support_.reserve(support_.size());
    for (const Rational& e : support_)
        out.support_.push_back(e + q);
    return out;
}

FiniteSeries FiniteSeries::truncated(Rational bound) const {
    FiniteSeries out;
    for (const Rational& e : support_) {
        if (e > bound)
            break;
        out.support_.push_back(e);
    }
    return out;
}

std::pair<Rational, FiniteSeries> FiniteSeries::unit_decompose() const {
    if (is_zero())
        throw std::domain_error("unit_decompose: zero series");
    Rational v = support_.front();
    return {v, shifted(-v)};
}

std::string FiniteSeries::to_string() const {
    if (is_zero())
        return "0";
    std::string s;
    for (const Rational& e : support_) {
        if (!s.empty())
            s += " + ";
        if (e.is_zero())
            s += "1";
        else if (e == Rational(1))
            s += "t";
        else
            s += "t^" + (e.is_integer() ? e.to_string() : "(" + e.to_string() + ")");
    }
    return s;
}

TruncatedSeries invert_unit(const FiniteSeries& u, Rational precision) {
    if (!u.is_unit())
        throw std::domain_error("invert_unit: input is not a unit");
    if (precision.is_negative())
        throw std::domain_error("invert_unit: negative precision");
    FiniteSeries a = u + FiniteSeries::one();
    FiniteSeries result = FiniteSeries::one();
    FiniteSeries power = a.truncated(precision);
    while (!power.is_zero()) {
        result = result + power;
        power = (power * a).truncated(precision);
    }
    return {result.truncated(precision), precision};
}

TruncatedSeries divide(const FiniteSeries& a, const FiniteSeries& b, Rational precision) {
    if (b.is_zero())
        throw std::domain_error("divide: division by zero");
    if (a.is_zero())
        return {FiniteSeries::zero(), precision};
    auto [shift, unit] = b.unit_decompose();
    Rational va = a.valuation().finite_value();
    // Enough internal precision that both the returned digits up to the bound
    // and the multiply-back congruence are exact.
    Rational working = precision + Rational(1);
    if (shift.is_positive())
        working += shift;
    if (va.is_negative())
        working -= va;
    TruncatedSeries inv = invert_unit(unit, working);
    FiniteSeries head = (a * inv.head).shifted(-shift).truncated(precision);
    return {head, precision};
}

} // namespace hahn
