#pragma once

#include <array>
#include <string_view>

#include "hahn/functors.hpp"

namespace hahn::tables {

// Transcriptions of the five printed functor tables on the ten standard
// basic kinds, in the canonical kind order. Cells are written in a compact
// ASCII notation: "p" is the row summand's parameter, "q" the column's,
// "r" their minimum, and X/Y the two comparison-dependent submodules
//   Xpq = Iq(p) if p<=q else Igt(q),   Ypq = Igt(0) if p<=q else A.
// These grids are the test fixture; the formula engine is computed
// independently of them.
using Row = std::array<std::string_view, 10>;
using Grid = std::array<Row, 10>;

const Row& dual_row();
const Grid& grid(Functor f); // tensor, hom, tor or ext

KSubmodule x_submodule(Rational p, Rational q);
KSubmodule y_submodule(Rational p, Rational q);

// Evaluates one printed cell at concrete parameters.
Multibasic eval_cell(std::string_view cell, Rational p, Rational q);

// The ten standard basics in table order, parameterized kinds at the given value.
StandardBasic basic_at(std::size_t index, Rational param);
std::size_t kind_index(BasicKind k);

// Printed-table entry for the given summands (their own parameters are used
// as p and q). For Functor::dual the column argument is ignored.
Multibasic table_lookup(Functor f, const StandardBasic& row, const StandardBasic& col);
Multibasic table_lookup(Functor f, const StandardBasic& entry);

// Deterministic emitters used by the CLI `table` command and the golden files.
std::string render_markdown(Functor f, Rational p, Rational q);
std::string render_json(Functor f, Rational p, Rational q);

} // namespace hahn::tables
