#include "hahn/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hahn {

namespace {

std::string_view strip(std::string_view s, std::size_t& offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Rational parse_rational_at(std::string_view text, std::size_t base) {
    std::size_t offset = base;
    text = strip(text, offset);
    if (text.empty())
        throw ParseError("expected a rational number", offset);
    std::size_t i = 0;
    auto read_int = [&]() -> long long {
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+'))
            ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == digits)
            throw ParseError("malformed rational", offset + i);
        return std::stoll(std::string(text.substr(start, i - start)));
    };
    long long num = read_int();
    long long den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int();
        if (den == 0)
            throw ParseError("zero denominator", offset + i);
    }
    if (i != text.size())
        throw ParseError("trailing characters after rational", offset + i);
    return Rational(num, den);
}

StandardBasic parse_atom_at(std::string_view text, std::size_t base) {
    std::size_t offset = base;
    text = strip(text, offset);
    if (text == "K")
        return StandardBasic::make(BasicKind::K);
    if (text == "A")
        return StandardBasic::make(BasicKind::A);
    if (text == "Igt0")
        return StandardBasic::make(BasicKind::Igt0);
    if (text == "Theta" || text == "Θ" || text == "θ")
        return StandardBasic::make(BasicKind::Theta);
    if (text == "Phi" || text == "Φ" || text == "φ")
        return StandardBasic::make(BasicKind::Phi);
    if (text == "F")
        return StandardBasic::make(BasicKind::F);

    auto param_form = [&](std::string_view prefix, BasicKind kind)
        -> std::optional<StandardBasic> {
        if (text.size() <= prefix.size() + 1 || text.substr(0, prefix.size()) != prefix ||
            text[prefix.size()] != '(' || text.back() != ')')
            return std::nullopt;
        std::string_view inner = text.substr(prefix.size() + 1,
                                             text.size() - prefix.size() - 2);
        Rational q = parse_rational_at(inner, offset + prefix.size() + 1);
        if (!q.is_positive())
            throw ParseError("parameter must be positive", offset + prefix.size() + 1);
        return StandardBasic::make(kind, q);
    };
    // Longer prefixes first so "A/Igt(" is not read as "A/Iq(".
    if (auto b = param_form("Igt0/Igt", BasicKind::Igt0ModIgt))
        return *b;
    if (auto b = param_form("Igt0/Iq", BasicKind::Igt0ModIq))
        return *b;
    if (auto b = param_form("A/Igt", BasicKind::AModIgt))
        return *b;
    if (auto b = param_form("A/Iq", BasicKind::AModIq))
        return *b;
    throw ParseError("unknown atom '" + std::string(text) + "'", offset);
}

} // namespace

Rational parse_rational(std::string_view text) { return parse_rational_at(text, 0); }

StandardBasic parse_atom(std::string_view text) { return parse_atom_at(text, 0); }

Multibasic parse_module_expr(std::string_view text) {
    std::size_t offset = 0;
    std::string_view whole = strip(text, offset);
    if (whole.empty())
        throw ParseError("empty module expression", offset);
    if (whole == "0")
        return Multibasic::zero();
    Multibasic out;
    std::size_t pos = 0;
    while (true) {
        std::size_t plus = whole.find('+', pos);
        std::string_view piece =
            whole.substr(pos, plus == std::string_view::npos ? std::string_view::npos
                                                             : plus - pos);
        out.add_summand(parse_atom_at(piece, offset + pos));
        if (plus == std::string_view::npos)
            break;
        pos = plus + 1;
        if (pos >= whole.size())
            throw ParseError("dangling '+'", offset + plus);
    }
    return out;
}

std::string render(const Multibasic& m) { return m.to_string(); }

KSubmodule parse_submodule(std::string_view text) {
    std::size_t offset = 0;
    text = strip(text, offset);
    if (text == "0")
        return KSubmodule::zero();
    if (text == "K")
        return KSubmodule::full();
    auto param_form = [&](std::string_view prefix) -> std::optional<Rational> {
        if (text.size() <= prefix.size() + 1 || text.substr(0, prefix.size()) != prefix ||
            text[prefix.size()] != '(' || text.back() != ')')
            return std::nullopt;
        std::string_view inner = text.substr(prefix.size() + 1, text.size() - prefix.size() - 2);
        return parse_rational_at(inner, offset + prefix.size() + 1);
    };
    if (auto q = param_form("Igt"))
        return KSubmodule::gt(*q);
    if (auto q = param_form("Iq"))
        return KSubmodule::geq(*q);
    throw ParseError("unknown submodule '" + std::string(text) + "'", offset);
}

FiniteSeries parse_series_exponents(const std::vector<std::string>& exponents) {
    std::vector<Rational> exps;
    exps.reserve(exponents.size());
    for (const std::string& e : exponents)
        exps.push_back(parse_rational(e));
    return FiniteSeries::from_exponents(std::move(exps));
}

std::vector<std::string> series_exponent_strings(const FiniteSeries& s) {
    std::vector<std::string> out;
    out.reserve(s.exponents().size());
    for (const Rational& e : s.exponents())
        out.push_back(e.to_string());
    return out;
}

SeriesMatrix parse_matrix_json_text(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("rows") || !doc["rows"].is_array())
        throw std::invalid_argument("matrix json: missing \"rows\" array");
    std::vector<std::vector<FiniteSeries>> rows;
    for (const auto& row : doc["rows"]) {
        std::vector<FiniteSeries> r;
        for (const auto& series : row)
            r.push_back(parse_series_exponents(series.get<std::vector<std::string>>()));
        rows.push_back(std::move(r));
    }
    return SeriesMatrix::from_rows(std::move(rows));
}

SeriesMatrix load_matrix_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json_text(buf.str());
}

} // namespace hahn
