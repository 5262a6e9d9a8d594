#pragma once

#include <vector>

#include "hahn/basic.hpp"
#include "hahn/series.hpp"

namespace hahn {

// Raised by the elimination method when the truncated arithmetic can no
// longer certify that a remaining entry is zero.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Rows generate a submodule of the free module of rank `cols`; entries must
// lie in the Hahn ring (no negative exponents).
class SeriesMatrix {
public:
    SeriesMatrix(std::size_t rows, std::size_t cols);
    static SeriesMatrix from_rows(std::vector<std::vector<FiniteSeries>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FiniteSeries& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, FiniteSeries v);

private:
    std::size_t rows_, cols_;
    std::vector<FiniteSeries> entries_;
};

// Determinant over the finite-support ring; in characteristic 2 this is the
// permanent, summed exactly.
FiniteSeries determinant(const SeriesMatrix& m, const std::vector<std::size_t>& row_set,
                         const std::vector<std::size_t>& col_set);

// Invariant valuations s_1 <= ... <= s_rank recovered from minors: the
// partial sums s_1 + ... + s_k equal the minimum valuation over all k x k
// minors, and the rank is the largest k with a nonzero minor. Division-free
// and exact. Empty for the zero matrix.
std::vector<Rational> smith_valuations(const SeriesMatrix& m);

// Cross-check oracle: pivots on the minimal-valuation entry, clears its row
// and column with division truncated at `precision`, and recurses. Reports
// PrecisionExhausted when truncation makes a zero test ambiguous; it never
// returns a wrong answer.
std::vector<Rational> smith_by_elimination(const SeriesMatrix& m, Rational precision);

// Doubles the precision until two consecutive runs agree.
std::vector<Rational> smith_by_elimination_adaptive(const SeriesMatrix& m,
                                                    Rational initial = Rational(4));

// The submodule spanned by the rows is free of rank `rank`.
Multibasic submodule_class(const SeriesMatrix& m);

// Cokernel of the row span inside the free module: torsion cyclic summands
// for the positive valuations plus a free part for the unused columns.
Multibasic cokernel_class(const SeriesMatrix& m);

struct SmithResult {
    std::vector<KSubmodule> ideals; // ascending in the lattice: zeros first
    Multibasic submodule_class;
    Multibasic cokernel_class;
};
SmithResult smith(const SeriesMatrix& m);

} // namespace hahn
