#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hahn/rational.hpp"

namespace hahn {

// Valuation of a series: the minimum exponent, or infinity for the zero
// series (and only for it).
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    static Valuation finite(Rational q) {
        Valuation v;
        v.value_ = q;
        return v;
    }

    bool is_infinite() const { return !value_.has_value(); }
    Rational finite_value() const {
        if (!value_)
            throw std::domain_error("Valuation: infinite");
        return *value_;
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;

    std::string to_string() const { return value_ ? value_->to_string() : "inf"; }

private:
    std::optional<Rational> value_;
};

// A series over the two-element field with finite support and exact rational
// exponents. The support is stored strictly sorted; all coefficients are 1,
// so the support determines the series. The empty support is the zero series.
class FiniteSeries {
public:
    FiniteSeries() = default;

    static FiniteSeries zero() { return {}; }
    static FiniteSeries one() { return monomial(Rational(0)); }
    static FiniteSeries monomial(Rational q) {
        FiniteSeries s;
        s.support_.push_back(q);
        return s;
    }
    // Folds repeated exponents in pairs (coefficients add in characteristic 2).
    static FiniteSeries from_exponents(std::vector<Rational> exponents);

    const std::vector<Rational>& exponents() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    std::size_t term_count() const { return support_.size(); }

    Valuation valuation() const {
        return support_.empty() ? Valuation::infinity() : Valuation::finite(support_.front());
    }
    bool is_unit() const { return !support_.empty() && support_.front() == Rational(0); }
    bool in_hahn_ring() const { return support_.empty() || !support_.front().is_negative(); }

    friend FiniteSeries operator+(const FiniteSeries& a, const FiniteSeries& b);
    friend FiniteSeries operator*(const FiniteSeries& a, const FiniteSeries& b);
    friend bool operator==(const FiniteSeries&, const FiniteSeries&) = default;

    // Multiplication by t^q.
    FiniteSeries shifted(Rational q) const;
    // Drops every term with exponent > bound (the boundary itself is kept).
    FiniteSeries truncated(Rational bound) const;

    // Writes a = t^{v} * u with u a unit; returns (v, u). Zero is rejected.
    std::pair<Rational, FiniteSeries> unit_decompose() const;

    std::string to_string() const;

private:
    std::vector<Rational> support_;
};

// A series known only modulo terms of exponent greater than `precision`.
// Every exponent in `head` is <= precision.
struct TruncatedSeries {
    FiniteSeries head;
    Rational precision;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
    std::string to_string() const {
        return head.to_string() + " mod Igt(" + precision.to_string() + ")";
    }
};

// Inverse of a unit u = 1 + a (with positive valuation of a) as the partial
// geometric sum 1 + a + a^2 + ... truncated at the requested precision.
// In characteristic 2 this is exact: u * result = 1 mod Igt(precision).
TruncatedSeries invert_unit(const FiniteSeries& u, Rational precision);

// Quotient a/b in the Hahn field, exact up to the requested precision:
// b * result.head = a mod Igt(precision), and result.head agrees with the
// true quotient on every exponent <= precision.
TruncatedSeries divide(const FiniteSeries& a, const FiniteSeries& b, Rational precision);

} // namespace hahn
