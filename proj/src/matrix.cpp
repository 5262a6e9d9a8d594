#include "hahn/matrix.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace hahn {

SeriesMatrix::SeriesMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

SeriesMatrix SeriesMatrix::from_rows(std::vector<std::vector<FiniteSeries>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    SeriesMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("SeriesMatrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, std::move(rows[i][j]));
    }
    return m;
}

void SeriesMatrix::set(std::size_t i, std::size_t j, FiniteSeries v) {
    if (!v.in_hahn_ring())
        throw std::invalid_argument("SeriesMatrix: entry has negative valuation");
    entries_[i * cols_ + j] = std::move(v);
}

FiniteSeries determinant(const SeriesMatrix& m, const std::vector<std::size_t>& row_set,
                         const std::vector<std::size_t>& col_set) {
    if (row_set.size() != col_set.size())
        throw std::invalid_argument("determinant: non-square minor");
    std::size_t k = row_set.size();
    if (k == 0)
        return FiniteSeries::one();
    // Laplace expansion along the first row; signs are irrelevant mod 2.
    FiniteSeries det;
    for (std::size_t jpos = 0; jpos < k; ++jpos) {
        const FiniteSeries& pivot = m.at(row_set[0], col_set[jpos]);
        if (pivot.is_zero())
            continue;
        std::vector<std::size_t> sub_rows(row_set.begin() + 1, row_set.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < k; ++j)
            if (j != jpos)
                sub_cols.push_back(col_set[j]);
        det = det + pivot * determinant(m, sub_rows, sub_cols);
    }
    return det;
}

namespace {

// All size-k index subsets of {0..n-1}.
void subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
             std::size_t start, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

std::optional<Rational> minor_valuation(const SeriesMatrix& m, std::size_t k) {
    std::optional<Rational> best;
    std::vector<std::size_t> rows_cur, cols_cur;
    subsets(m.rows(), k, rows_cur, 0, [&](const std::vector<std::size_t>& rs) {
        subsets(m.cols(), k, cols_cur, 0, [&](const std::vector<std::size_t>& cs) {
            FiniteSeries d = determinant(m, rs, cs);
            if (d.is_zero())
                return;
            Rational v = d.valuation().finite_value();
            if (!best || v < *best)
                best = v;
        });
    });
    return best;
}

} // namespace

std::vector<Rational> smith_valuations(const SeriesMatrix& m) {
    std::vector<Rational> out;
    Rational prev(0);
    std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        auto dk = minor_valuation(m, k);
        if (!dk)
            break;
        out.push_back(*dk - prev);
        prev = *dk;
    }
    return out;
}

namespace {

// Quotient a/b by leading-term elimination. The remainder's valuation rises
// strictly each step; either it hits zero (the quotient is exact and finite)
// or the digits past `bound` are cut off. Exact quotients keep elimination
// steps fully certified.
struct Quotient {
    FiniteSeries head;
    bool exact;
};

Quotient truncated_quotient(const FiniteSeries& a, const FiniteSeries& b, Rational bound) {
    if (b.is_zero())
        throw std::domain_error("truncated_quotient: division by zero");
    Rational vb = b.valuation().finite_value();
    FiniteSeries q, r = a;
    while (!r.is_zero()) {
        Rational step = r.valuation().finite_value() - vb;
        if (step > bound)
            return {q, false};
        FiniteSeries mono = FiniteSeries::monomial(step);
        q = q + mono;
        r = r + mono * b;
    }
    return {q, true};
}

struct Entry {
    FiniteSeries head;
    bool exact = true; // head is the true value, not just its truncation
};

struct WorkMatrix {
    std::vector<std::vector<Entry>> e;

    std::size_t rows() const { return e.size(); }
    std::size_t cols() const { return e.empty() ? 0 : e.front().size(); }

    void drop(std::size_t row, std::size_t col) {
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(row));
        for (auto& r : e)
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(col));
    }
};

} // namespace

std::vector<Rational> smith_by_elimination(const SeriesMatrix& m, Rational precision) {
    WorkMatrix w;
    w.e.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            w.e[i].push_back({m.at(i, j), true});

    std::vector<Rational> vals;
    while (w.rows() > 0 && w.cols() > 0) {
        std::optional<Rational> best;
        std::size_t pi = 0, pj = 0;
        bool tail_certified = true;
        for (std::size_t i = 0; i < w.rows(); ++i)
            for (std::size_t j = 0; j < w.cols(); ++j) {
                if (w.e[i][j].head.is_zero()) {
                    tail_certified = tail_certified && w.e[i][j].exact;
                    continue;
                }
                Rational v = w.e[i][j].head.valuation().finite_value();
                if (!best || v < *best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!best) {
            if (!tail_certified)
                throw PrecisionExhausted(
                    "smith_by_elimination: remaining entries vanish only up to precision " +
                    precision.to_string());
            break; // certified zero block
        }
        vals.push_back(*best);
        const Entry pivot = w.e[pi][pj];
        // Row operations clear the pivot column. When the quotient is exact
        // and all operands are exact, the result stays certified; otherwise
        // the touched entries are only valid up to the working precision.
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == pi || w.e[i][pj].head.is_zero())
                continue;
            Quotient factor = truncated_quotient(w.e[i][pj].head, pivot.head, precision);
            bool factor_known = factor.exact && pivot.exact && w.e[i][pj].exact;
            for (std::size_t j = 0; j < w.cols(); ++j) {
                // factor * 0 is exact no matter how the factor was cut off
                bool term_known =
                    w.e[pi][j].exact && (factor_known || w.e[pi][j].head.is_zero());
                bool ok = w.e[i][j].exact && term_known;
                FiniteSeries sum = w.e[i][j].head + factor.head * w.e[pi][j].head;
                w.e[i][j] = {ok ? sum : sum.truncated(precision), ok};
            }
            // The true operation uses the untruncated factor, which cancels
            // the pivot-column entry exactly.
            w.e[i][pj] = {FiniteSeries::zero(), true};
        }
        // Column operations clear the pivot row exactly; the pivot column is
        // zero in other rows by now, so nothing else changes.
        for (std::size_t j = 0; j < w.cols(); ++j) {
            if (j == pj)
                continue;
            w.e[pi][j] = {FiniteSeries::zero(), true};
        }
        w.drop(pi, pj);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<Rational> smith_by_elimination_adaptive(const SeriesMatrix& m, Rational initial) {
    Rational n = initial;
    std::optional<std::vector<Rational>> prev;
    for (int round = 0; round < 24; ++round) {
        std::optional<std::vector<Rational>> cur;
        try {
            cur = smith_by_elimination(m, n);
        } catch (const PrecisionExhausted&) {
        }
        if (cur && prev && *cur == *prev)
            return *cur;
        prev = cur;
        n = n * Rational(2);
    }
    throw PrecisionExhausted("smith_by_elimination_adaptive: no stable answer");
}

Multibasic submodule_class(const SeriesMatrix& m) {
    std::size_t rank = smith_valuations(m).size();
    Multibasic out;
    for (std::size_t i = 0; i < rank; ++i)
        out.add_summand(StandardBasic::make(BasicKind::A));
    return out;
}

Multibasic cokernel_class(const SeriesMatrix& m) {
    std::vector<Rational> vals = smith_valuations(m);
    Multibasic out;
    for (const Rational& s : vals)
        if (s.is_positive())
            out.add_summand(StandardBasic::make(BasicKind::AModIq, s));
    for (std::size_t i = vals.size(); i < m.cols(); ++i)
        out.add_summand(StandardBasic::make(BasicKind::A));
    return out;
}

SmithResult smith(const SeriesMatrix& m) {
    std::vector<Rational> vals = smith_valuations(m);
    SmithResult result;
    for (std::size_t i = vals.size(); i < m.cols(); ++i)
        result.ideals.push_back(KSubmodule::zero());
    for (auto it = vals.rbegin(); it != vals.rend(); ++it)
        result.ideals.push_back(KSubmodule::geq(*it));
    result.submodule_class = submodule_class(m);
    result.cokernel_class = cokernel_class(m);
    return result;
}

} // namespace hahn
