#include "hahn/tables.hpp"

#include <stdexcept>

namespace hahn::tables {

namespace {

// Kind order: K, A, I>0, Th, Ph, F, A/Iq, A/I>q, I>0/Iq, I>0/I>q.

constexpr Row kDualRow = {"K", "Th", "Ph", "A", "I>0", "F", "I>0/I>q", "A/I>q", "I>0/Iq", "A/Iq"};

constexpr Grid kTensor = {{
    {"K", "K", "K", "0", "0", "0", "0", "0", "0", "0"},
    {"K", "A", "I>0", "Th", "Ph", "F", "A/Iq", "A/I>q", "I>0/Iq", "I>0/I>q"},
    {"K", "I>0", "I>0", "Th", "Th", "0", "I>0/I>q", "I>0/I>q", "I>0/I>q", "I>0/I>q"},
    {"0", "Th", "Th", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "Ph", "Th", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "F", "0", "0", "0", "F", "F", "F", "0", "0"},
    {"0", "A/Ip", "I>0/I>p", "0", "0", "F", "A/Ir", "A/Xpq", "I>0/Xqp", "I>0/I>r"},
    {"0", "A/I>p", "I>0/I>p", "0", "0", "F", "A/Xqp", "A/I>r", "I>0/Xqp", "I>0/I>r"},
    {"0", "I>0/Ip", "I>0/I>p", "0", "0", "0", "I>0/Xpq", "I>0/Xpq", "I>0/I>r", "I>0/I>r"},
    {"0", "I>0/I>p", "I>0/I>p", "0", "0", "0", "I>0/I>r", "I>0/I>r", "I>0/I>r", "I>0/I>r"},
}};

constexpr Grid kHom = {{
    {"K", "0", "0", "K", "K", "0", "0", "0", "0", "0"},
    {"K", "A", "I>0", "Th", "Ph", "F", "A/Iq", "A/I>q", "I>0/Iq", "I>0/I>q"},
    {"K", "A", "A", "Ph", "Ph", "0", "A/Iq", "A/Iq", "A/Iq", "A/Iq"},
    {"0", "0", "0", "A", "A", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "I>0", "A", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "F", "0", "F", "0", "F", "0", "F"},
    {"0", "0", "0", "I>0/I>p", "A/Ip", "F", "A/Ir", "Ypq/I>r", "Yqp/Ir", "I>0/I>r"},
    {"0", "0", "0", "A/I>p", "A/Ip", "F", "A/Ir", "A/I>r", "Yqp/Ir", "Yqp/I>r"},
    {"0", "0", "0", "I>0/Ip", "A/Ip", "0", "A/Ir", "Ypq/Ir", "A/Ir", "Ypq/Ir"},
    {"0", "0", "0", "A/Ip", "A/Ip", "0", "A/Ir", "A/Ir", "A/Ir", "A/Ir"},
}};

constexpr Grid kTor = {{
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "Th", "Th", "0", "I>0/I>q", "I>0/I>q", "I>0/I>q", "I>0/I>q"},
    {"0", "0", "0", "Th", "Ph", "F", "A/Iq", "A/I>q", "I>0/Iq", "I>0/I>q"},
    {"0", "0", "0", "0", "F", "0", "F", "0", "F", "0"},
    {"0", "0", "0", "I>0/I>p", "A/Ip", "F", "A/Ir", "Ypq/I>r", "Yqp/Ir", "I>0/I>r"},
    {"0", "0", "0", "I>0/I>p", "A/I>p", "0", "Yqp/I>r", "I>0/I>r", "Yqp/I>r", "I>0/I>r"},
    {"0", "0", "0", "I>0/I>p", "I>0/Ip", "F", "Ypq/Ir", "Ypq/I>r", "I>0/Ir", "I>0/I>r"},
    {"0", "0", "0", "I>0/I>p", "I>0/I>p", "0", "I>0/I>r", "I>0/I>r", "I>0/I>r", "I>0/I>r"},
}};

constexpr Grid kExt = {{
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "A", "A", "0", "0", "0", "A/Iq", "A/Iq", "A/Iq", "A/Iq"},
    {"0", "A", "I>0", "0", "0", "F", "A/Iq", "A/I>q", "I>0/Iq", "I>0/I>q"},
    {"0", "0", "F", "0", "0", "0", "0", "0", "F", "F"},
    {"0", "A/Ip", "I>0/I>p", "0", "0", "F", "A/Ir", "A/Xpq", "I>0/Xqp", "I>0/I>r"},
    {"0", "A/Ip", "A/I>p", "0", "0", "0", "A/Ir", "A/Ir", "A/Xqp", "A/Xqp"},
    {"0", "A/Ip", "I>0/Ip", "0", "0", "F", "A/Ir", "A/Xpq", "I>0/Ir", "I>0/Xpq"},
    {"0", "A/Ip", "A/Ip", "0", "0", "0", "A/Ir", "A/Ir", "A/Ir", "A/Ir"},
}};

KSubmodule numerator_symbol(std::string_view s, Rational p, Rational q) {
    if (s == "K")
        return KSubmodule::full();
    if (s == "A")
        return KSubmodule::geq(Rational(0));
    if (s == "I>0")
        return KSubmodule::gt(Rational(0));
    if (s == "Ypq")
        return y_submodule(p, q);
    if (s == "Yqp")
        return y_submodule(q, p);
    throw std::invalid_argument("table cell: unknown numerator symbol");
}

KSubmodule denominator_symbol(std::string_view s, Rational p, Rational q) {
    Rational r = p < q ? p : q;
    if (s == "Ip")
        return KSubmodule::geq(p);
    if (s == "Iq")
        return KSubmodule::geq(q);
    if (s == "Ir")
        return KSubmodule::geq(r);
    if (s == "I>p")
        return KSubmodule::gt(p);
    if (s == "I>q")
        return KSubmodule::gt(q);
    if (s == "I>r")
        return KSubmodule::gt(r);
    if (s == "Xpq")
        return x_submodule(p, q);
    if (s == "Xqp")
        return x_submodule(q, p);
    throw std::invalid_argument("table cell: unknown denominator symbol");
}

} // namespace

const Row& dual_row() { return kDualRow; }

const Grid& grid(Functor f) {
    switch (f) {
    case Functor::tensor: return kTensor;
    case Functor::hom: return kHom;
    case Functor::tor: return kTor;
    case Functor::ext: return kExt;
    default: throw std::invalid_argument("grid: dual has a single row, use dual_row()");
    }
}

KSubmodule x_submodule(Rational p, Rational q) {
    return p <= q ? KSubmodule::geq(p) : KSubmodule::gt(q);
}

KSubmodule y_submodule(Rational p, Rational q) {
    return p <= q ? KSubmodule::gt(Rational(0)) : KSubmodule::geq(Rational(0));
}

Multibasic eval_cell(std::string_view cell, Rational p, Rational q) {
    if (cell == "0")
        return Multibasic::zero();
    if (cell == "K")
        return Multibasic(StandardBasic::make(BasicKind::K));
    if (cell == "Th")
        return Multibasic(StandardBasic::make(BasicKind::Theta));
    if (cell == "Ph")
        return Multibasic(StandardBasic::make(BasicKind::Phi));
    if (cell == "F")
        return Multibasic(StandardBasic::make(BasicKind::F));
    auto slash = cell.find('/');
    if (slash == std::string_view::npos) {
        if (cell == "A")
            return Multibasic(StandardBasic::make(BasicKind::A));
        if (cell == "I>0")
            return Multibasic(StandardBasic::make(BasicKind::Igt0));
        throw std::invalid_argument("table cell: unknown atom");
    }
    KSubmodule num = numerator_symbol(cell.substr(0, slash), p, q);
    KSubmodule den = denominator_symbol(cell.substr(slash + 1), p, q);
    auto b = normalize_subquotient(num, den);
    return b ? Multibasic(*b) : Multibasic::zero();
}

std::size_t kind_index(BasicKind k) { return static_cast<std::size_t>(k); }

StandardBasic basic_at(std::size_t index, Rational param) {
    BasicKind k = static_cast<BasicKind>(index);
    return kind_has_param(k) ? StandardBasic::make(k, param) : StandardBasic::make(k);
}

Multibasic table_lookup(Functor f, const StandardBasic& entry) {
    if (f != Functor::dual)
        throw std::invalid_argument("table_lookup: binary functor needs two arguments");
    Rational q = entry.has_param() ? entry.param() : Rational(0);
    return eval_cell(kDualRow[kind_index(entry.kind())], Rational(0), q);
}

Multibasic table_lookup(Functor f, const StandardBasic& row, const StandardBasic& col) {
    if (f == Functor::dual)
        return table_lookup(f, row);
    Rational p = row.has_param() ? row.param() : Rational(0);
    Rational q = col.has_param() ? col.param() : Rational(0);
    return eval_cell(grid(f)[kind_index(row.kind())][kind_index(col.kind())], p, q);
}

namespace {

std::string header_name(Functor f) {
    switch (f) {
    case Functor::dual: return "D(M)";
    case Functor::tensor: return "M (x) N";
    case Functor::hom: return "Hom(M,N)";
    case Functor::tor: return "Tor(M,N)";
    case Functor::ext: return "Ext(M,N)";
    }
    return {};
}

} // namespace

std::string render_markdown(Functor f, Rational p, Rational q) {
    std::string out = "# " + functor_name(f) + ", p = " + p.to_string() +
                      ", q = " + q.to_string() + "\n\n";
    if (f == Functor::dual) {
        std::string head = "| M |", sep = "|---|", row = "| DM |";
        for (std::size_t j = 0; j < 10; ++j) {
            head += " " + basic_at(j, q).to_string() + " |";
            sep += "---|";
            row += " " + eval_cell(kDualRow[j], Rational(0), q).to_string() + " |";
        }
        return out + head + "\n" + sep + "\n" + row + "\n";
    }
    std::string head = "| " + header_name(f) + " |", sep = "|---|";
    for (std::size_t j = 0; j < 10; ++j) {
        head += " " + basic_at(j, q).to_string() + " |";
        sep += "---|";
    }
    out += head + "\n" + sep + "\n";
    const Grid& g = grid(f);
    for (std::size_t i = 0; i < 10; ++i) {
        std::string row = "| " + basic_at(i, p).to_string() + " |";
        for (std::size_t j = 0; j < 10; ++j)
            row += " " + eval_cell(g[i][j], p, q).to_string() + " |";
        out += row + "\n";
    }
    return out;
}

std::string render_json(Functor f, Rational p, Rational q) {
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    std::string out = "{\"functor\":" + quote(functor_name(f)) + ",\"p\":" +
                      quote(p.to_string()) + ",\"q\":" + quote(q.to_string());
    if (f == Functor::dual) {
        out += ",\"modules\":[";
        for (std::size_t j = 0; j < 10; ++j)
            out += (j ? "," : "") + quote(basic_at(j, q).to_string());
        out += "],\"dual\":[";
        for (std::size_t j = 0; j < 10; ++j)
            out += (j ? "," : "") + quote(eval_cell(kDualRow[j], Rational(0), q).to_string());
        return out + "]}";
    }
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < 10; ++i)
        out += (i ? "," : "") + quote(basic_at(i, p).to_string());
    out += "],\"cols\":[";
    for (std::size_t j = 0; j < 10; ++j)
        out += (j ? "," : "") + quote(basic_at(j, q).to_string());
    out += "],\"entries\":[";
    const Grid& g = grid(f);
    for (std::size_t i = 0; i < 10; ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < 10; ++j)
            out += (j ? "," : "") + quote(eval_cell(g[i][j], p, q).to_string());
        out += "]";
    }
    return out + "]}";
}

} // namespace hahn::tables
