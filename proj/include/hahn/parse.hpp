#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hahn/basic.hpp"
#include "hahn/matrix.hpp"

namespace hahn {

// Parse failures carry the byte offset of the offending token within the
// original input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t at)
        : std::runtime_error(message + " (at byte " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

// "p/q" or a plain integer.
Rational parse_rational(std::string_view text);

// Atom syntax: K | A | Igt0 | Theta | Phi | F | A/Iq(r) | A/Igt(r)
//            | Igt0/Iq(r) | Igt0/Igt(r),
// with the unicode letters for Theta and Phi accepted as input aliases.
StandardBasic parse_atom(std::string_view text);

// expr := atom ("+" atom)*, plus "0" for the zero module. Rendering emits the
// canonical sorted form, so render(parse(s)) is the canonical form of s.
Multibasic parse_module_expr(std::string_view text);
std::string render(const Multibasic& m);

// Submodule syntax: 0 | K | Iq(r) | Igt(r).
KSubmodule parse_submodule(std::string_view text);

// Series as a JSON list of exponent strings, e.g. ["0","1/2","1"].
FiniteSeries parse_series_exponents(const std::vector<std::string>& exponents);
std::vector<std::string> series_exponent_strings(const FiniteSeries& s);

// Matrix file: {"rows": [[series...]]} with each series a list of exponent
// strings.
SeriesMatrix load_matrix_json(const std::string& path);
SeriesMatrix parse_matrix_json_text(std::string_view text);

} // namespace hahn
