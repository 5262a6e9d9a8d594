#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hahn/dvr.hpp"
#include "hahn/invariants.hpp"
#include "hahn/matrix.hpp"
#include "hahn/parse.hpp"
#include "hahn/root_algebra.hpp"
#include "hahn/tables.hpp"

namespace {

using namespace hahn;

Rational default_precision() {
    if (const char* env = std::getenv("HAHN_PRECISION"))
        return parse_rational(env);
    return Rational(8);
}

Functor functor_from_name(const std::string& name) {
    if (name == "dual")
        return Functor::dual;
    if (name == "tensor")
        return Functor::tensor;
    if (name == "hom")
        return Functor::hom;
    if (name == "tor")
        return Functor::tor;
    if (name == "ext")
        return Functor::ext;
    throw std::invalid_argument("unknown functor '" + name + "'");
}

int run_eval(const std::string& functor, const std::string& lhs, const std::string& rhs) {
    Functor f = functor_from_name(functor);
    Multibasic m = parse_module_expr(lhs);
    if (f == Functor::dual) {
        if (!rhs.empty())
            throw std::invalid_argument("dual takes a single expression");
        std::cout << render(dual(m)) << "\n";
        return 0;
    }
    if (rhs.empty())
        throw std::invalid_argument(functor + " takes two expressions");
    Multibasic n = parse_module_expr(rhs);
    Multibasic result = f == Functor::tensor ? tensor(m, n)
                        : f == Functor::hom  ? hom(m, n)
                        : f == Functor::tor  ? tor(m, n)
                                             : ext(m, n);
    std::cout << render(result) << "\n";
    return 0;
}

int run_table(const std::string& functor, const std::string& p_text, const std::string& q_text,
              const std::string& format) {
    Functor f = functor_from_name(functor);
    Rational p = parse_rational(p_text);
    Rational q = parse_rational(q_text);
    if (format == "json")
        std::cout << tables::render_json(f, p, q) << "\n";
    else
        std::cout << tables::render_markdown(f, p, q);
    return 0;
}

int run_smith(const std::string& path) {
    SeriesMatrix m = load_matrix_json(path);
    SmithResult result = smith(m);
    std::vector<Rational> vals = smith_valuations(m);
    // Cross-check with the division-based route at the configured precision.
    std::vector<Rational> elim = smith_by_elimination_adaptive(m, default_precision());
    if (vals != elim) {
        std::cerr << "error: elimination cross-check disagrees with minor method\n";
        return 1;
    }
    std::cout << "valuations:";
    for (const Rational& v : vals)
        std::cout << " " << v.to_string();
    std::cout << "\n";
    std::cout << "cokernel: " << render(result.cokernel_class) << "\n";
    return 0;
}

int run_invariants(const std::string& expr) {
    Multibasic m = parse_module_expr(expr);
    InvariantReport report = decompose_report(m);
    nlohmann::json psi = nlohmann::json::object();
    for (const auto& [basic, count] : report.multiplicities)
        psi[basic.to_string()] = count;
    nlohmann::json doc = {{"module", render(m)},
                          {"f", report.flat_count},
                          {"g", report.finitely_generated_count},
                          {"psi", psi}};
    std::cout << doc.dump() << "\n";
    return 0;
}

int run_psi(const std::string& atom, const std::string& expr) {
    StandardBasic target = parse_atom(atom);
    Multibasic m = parse_module_expr(expr);
    std::cout << psi_count(target, m) << "\n";
    return 0;
}

int run_resolve(const std::string& expr) {
    Multibasic m = parse_module_expr(expr);
    InjectiveResolution res = injective_resolution(m);
    std::cout << "0 -> " << render(res.module) << " -> " << render(res.hull) << " -> "
              << render(res.quotient) << " -> 0\n";
    return 0;
}

int run_p_resolve(const std::string& atom) {
    StandardBasic b = parse_atom(atom);
    PResolution res = p_injective_resolution(b);
    std::cout << "terms:";
    for (auto t : res.terms)
        std::cout << (t == PResolution::Term::P ? " P" : " Q");
    std::cout << "\nmaps:";
    for (const auto& m : res.maps)
        std::cout << " " << m.to_string();
    std::cout << "\nperiod_start: " << res.period_start << "\n";
    std::cout << "finite: " << (res.finite ? "yes" : "no") << "\n";
    return 0;
}

int run_p_incoherence(const std::string& q_text) {
    Rational q = parse_rational(q_text);
    IncoherenceWitness w = incoherence_witness(q);
    std::cout << "kernel: " << render(w.kernel) << "\n";
    std::cout << "finitely_presented: " << (w.finitely_presented ? "true" : "false") << "\n";
    return 0;
}

hahn::dvr::DvrMultibasic parse_dvr_expr(const std::string& text) {
    using namespace hahn::dvr;
    DvrMultibasic out;
    std::size_t pos = 0;
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string whole = trim(text);
    if (whole == "0")
        return DvrMultibasic::zero();
    while (pos <= whole.size()) {
        std::size_t plus = whole.find('+', pos);
        std::string piece = trim(whole.substr(
            pos, plus == std::string::npos ? std::string::npos : plus - pos));
        if (piece == "K")
            out.add_summand(DvrBasic::field());
        else if (piece == "A")
            out.add_summand(DvrBasic::ring());
        else if (piece == "Theta")
            out.add_summand(DvrBasic::theta());
        else if (piece.rfind("A/In(", 0) == 0 && piece.back() == ')')
            out.add_summand(DvrBasic::torsion(std::stoll(piece.substr(5, piece.size() - 6))));
        else
            throw ParseError("unknown dvr atom '" + piece + "'", pos);
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
    }
    return out;
}

int run_dvr_eval(const std::string& functor, const std::string& lhs, const std::string& rhs) {
    using namespace hahn::dvr;
    DvrMultibasic m = parse_dvr_expr(lhs);
    if (functor == "dual") {
        std::cout << dvr_dual(m).to_string() << "\n";
        return 0;
    }
    if (functor == "invariants") {
        DvrInvariants inv = dvr_invariants(m);
        nlohmann::json doc = {{"module", m.to_string()},
                              {"dim_K_tensor", inv.dim_k_tensor},
                              {"dim_K_tensor_dual", inv.dim_k_tensor_dual},
                              {"dim_F_tensor", inv.dim_f_tensor},
                              {"dim_F_tensor_dual", inv.dim_f_tensor_dual},
                              {"ann", inv.annihilator.to_string()}};
        std::cout << doc.dump() << "\n";
        return 0;
    }
    if (rhs.empty())
        throw std::invalid_argument("dvr " + functor + " takes two expressions");
    DvrMultibasic n = parse_dvr_expr(rhs);
    if (functor == "hom")
        std::cout << dvr_hom(m, n).to_string() << "\n";
    else if (functor == "tensor")
        std::cout << dvr_tensor(m, n).to_string() << "\n";
    else
        throw std::invalid_argument("unknown dvr functor '" + functor + "'");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for modules over the Hahn valuation ring"};
    app.require_subcommand(1);

    std::string functor, lhs, rhs, p_text, q_text, format = "md", path, atom;

    auto* eval = app.add_subcommand("eval", "Apply a functor to module expressions");
    eval->add_option("functor", functor, "dual|tensor|hom|tor|ext")->required();
    eval->add_option("expr", lhs, "first module expression")->required();
    eval->add_option("expr2", rhs, "second module expression");

    auto* table = app.add_subcommand("table", "Regenerate a printed functor table");
    table->add_option("functor", functor, "dual|tensor|hom|tor|ext")->required();
    table->add_option("--p", p_text, "row parameter")->required();
    table->add_option("--q", q_text, "column parameter")->required();
    table->add_option("--format", format, "md|json")->check(CLI::IsMember({"md", "json"}));

    auto* smith_cmd = app.add_subcommand("smith", "Classify a submodule given by generators");
    smith_cmd->add_option("matrix", path, "matrix JSON file")->required();

    auto* invariants_cmd = app.add_subcommand("invariants", "Invariant report as JSON");
    invariants_cmd->add_option("expr", lhs, "module expression")->required();

    auto* psi = app.add_subcommand("psi", "Multiplicity of a standard basic summand");
    psi->add_option("atom", atom, "standard basic atom")->required();
    psi->add_option("expr", lhs, "module expression")->required();

    auto* resolve = app.add_subcommand("resolve", "Two-step injective resolution");
    resolve->add_option("expr", lhs, "module expression")->required();

    auto* presolve = app.add_subcommand("p-resolve", "Periodic injective resolution over the quotient ring");
    presolve->add_option("atom", atom, "truncated basic atom")->required();

    auto* pinc = app.add_subcommand("p-incoherence", "Kernel witness for an ideal of the quotient ring");
    pinc->add_option("q", q_text, "rational in [0,1]")->required();

    auto* dvr_cmd = app.add_subcommand("dvr", "Discrete-valuation-ring tables");
    auto* dvr_eval = dvr_cmd->add_subcommand("eval", "Apply a DVR functor");
    dvr_eval->add_option("functor", functor, "dual|tensor|hom|invariants")->required();
    dvr_eval->add_option("expr", lhs, "first expression")->required();
    dvr_eval->add_option("expr2", rhs, "second expression");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed())
            return run_eval(functor, lhs, rhs);
        if (table->parsed())
            return run_table(functor, p_text, q_text, format);
        if (smith_cmd->parsed())
            return run_smith(path);
        if (invariants_cmd->parsed())
            return run_invariants(lhs);
        if (psi->parsed())
            return run_psi(atom, lhs);
        if (resolve->parsed())
            return run_resolve(lhs);
        if (presolve->parsed())
            return run_p_resolve(atom);
        if (pinc->parsed())
            return run_p_incoherence(q_text);
        if (dvr_cmd->parsed() && dvr_eval->parsed())
            return run_dvr_eval(functor, lhs, rhs);
        std::cerr << "error: missing subcommand\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
