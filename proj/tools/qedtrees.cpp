#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qedtrees/checks.hpp"
#include "qedtrees/format.hpp"
#include "qedtrees/hopf.hpp"
#include "qedtrees/qed.hpp"
#include "qedtrees/renormalization.hpp"

using namespace qedtrees;
using nlohmann::json;

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using MapResult = std::variant<Element, Tensor>;

struct NamedMap {
    std::vector<AlgebraTag> input;
    std::string help;
    std::function<MapResult(const Tensor&)> apply;
};

Element only(const Tensor& x) { return to_element(x); }

std::map<std::string, NamedMap> named_maps(const Structures& s)
{
    const auto E = AlgebraTag::Electron;
    const auto G = AlgebraTag::Photon;
    const auto A = AlgebraTag::Charge;
    const auto NC = AlgebraTag::ChargeNC;
    auto tensor_map = [](const LinearMap& f) { return [f](const Tensor& x) -> MapResult { return f(only(x)); }; };
    auto element_map = [](const ElementMap& f) { return [f](const Tensor& x) -> MapResult { return f(only(x)); }; };
    std::map<std::string, NamedMap> maps;
    maps["delta-p-e"] = {{E}, "pruning coproduct of He", tensor_map(s.delta_p_e)};
    maps["delta-p-gamma"] = {{G}, "pruning coproduct of Hgamma", tensor_map(s.delta_p_gamma)};
    maps["antipode-p-e"] = {{E}, "antipode of He", element_map(s.antipode_p_e)};
    maps["antipode-p-gamma"] = {{G}, "antipode of Hgamma", element_map(s.antipode_p_gamma)};
    maps["delta-alpha"] = {{A}, "charge coproduct", tensor_map(s.delta_alpha)};
    maps["delta-alpha-nc"] = {{NC}, "noncommutative charge coproduct", tensor_map(s.delta_alpha_nc)};
    maps["antipode-alpha"] = {{A}, "charge antipode", element_map(s.antipode_alpha)};
    maps["antipode-alpha-nc"] = {{NC}, "noncommutative charge antipode", element_map(s.antipode_alpha_nc)};
    maps["delta-small"] = {{NC}, "coaction delta of Halpha on trees", tensor_map(s.delta_small)};
    maps["coaction-e"] = {{E}, "coaction He -> He (x) Halpha", tensor_map(s.delta_e)};
    maps["coaction-gamma"] = {{G}, "coaction Hgamma -> Hgamma (x) Halpha", tensor_map(s.delta_gamma)};
    maps["delta-e"] = {{E}, "electron renormalization coaction He -> He (x) Halpha (x) He",
                       tensor_map(s.electron_coaction)};
    maps["delta-e-recursive"] = {{E}, "delta-e from its recursion", tensor_map(s.electron_coaction_recursive)};
    maps["delta-gamma"] = {{G}, "photon renormalization coaction Hgamma -> Hgamma (x) Halpha",
                           tensor_map(s.photon_coaction)};
    maps["sigma"] = {{G}, "sigma: Hgamma -> Halpha", element_map(s.sigma)};
    maps["pruning-factorized-e"] = {{E}, "pruning coproduct of a tree as a sum over factorizations",
                                    [](const Tensor& x) -> MapResult {
                                        return pruning_coproduct_factorized(AlgebraTag::Electron,
                                                                            tree_of_word(AlgebraTag::Electron,
                                                                                         only(x).terms().begin()->first));
                                    }};
    maps["pruning-factorized-gamma"] = {{G}, "pruning coproduct of a tree as a sum over factorizations",
                                        [](const Tensor& x) -> MapResult {
                                            return pruning_coproduct_factorized(AlgebraTag::Photon,
                                                                                tree_of_word(AlgebraTag::Photon,
                                                                                             only(x).terms().begin()->first));
                                        }};
    maps["qed-coproduct"] = {{A, E}, "coproduct of Halpha x| He", [&s](const Tensor& x) -> MapResult {
                                 return s.qed.coproduct(x);
                             }};
    maps["qed-antipode"] = {{A, E}, "antipode of Halpha x| He", [&s](const Tensor& x) -> MapResult {
                                return s.qed.antipode(x);
                            }};
    maps["photon-qed-coproduct"] = {{A, G}, "coproduct of Halpha x| Hgamma", [&s](const Tensor& x) -> MapResult {
                                        return s.photon_qed.coproduct(x);
                                    }};
    maps["photon-qed-antipode"] = {{A, G}, "antipode of Halpha x| Hgamma", [&s](const Tensor& x) -> MapResult {
                                       return s.photon_qed.antipode(x);
                                   }};
    maps["electron-coaction"] = maps["delta-e"];
    maps["photon-coaction"] = maps["delta-gamma"];
    return maps;
}

std::string read_input(const std::string& text)
{
    if (text != "-")
        return text;
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

Tensor parse_input(const std::vector<AlgebraTag>& tags, const std::string& raw)
{
    const auto text = trim(raw);
    if (!text.empty() && text.front() == '{') {
        const auto j = json::parse(text);
        if (j.contains("tag")) {
            const auto x = element_from_json(j);
            if (tags.size() != 1 || x.tag() != tags[0])
                throw UsageError("input element lives in the wrong algebra");
            return as_tensor(x);
        }
        auto x = tensor_from_json(j);
        if (x.tags() != tags)
            throw UsageError("input tensor lives in the wrong algebras");
        return x;
    }
    if (tags.size() == 1)
        return as_tensor(parse_element(tags[0], text));
    return parse_tensor(tags, text);
}

std::string emit(const MapResult& r, Format format)
{
    return std::visit(
        [format](const auto& x) { return format == Format::Json ? to_json(x).dump(2) : to_text(x, format); }, r);
}

// ------------------------------------------------------------ enum

int run_enum(std::uint32_t n, bool count_only, Format format)
{
    const auto& trees = enumerate(n);
    if (format == Format::Json) {
        json j = {{"order", n}, {"count", trees.size()}};
        if (!count_only) {
            j["trees"] = json::array();
            for (Tree t : trees)
                j["trees"].push_back(render(t));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (count_only) {
        std::cout << trees.size() << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < trees.size(); ++i)
        std::cout << canonical_name(trees[i]) << "  " << (format == Format::Latex ? render_latex(trees[i]) : render(trees[i])) << "\n";
    return 0;
}

// ------------------------------------------------------------ tree

int run_tree(const std::string& op, const std::vector<std::string>& args, Format format)
{
    auto tree_arg = [&](std::size_t i) {
        if (i >= args.size())
            throw UsageError("tree " + op + " needs " + std::to_string(i + 1) + " tree argument(s)");
        return parse_tree(trim(read_input(args[i])));
    };
    auto show = [format](Tree t) { return format == Format::Latex ? render_latex(t) : render(t); };
    std::vector<Tree> result;
    if (op == "over")
        result = {over(tree_arg(0), tree_arg(1))};
    else if (op == "under")
        result = {under(tree_arg(0), tree_arg(1))};
    else if (op == "graft")
        result = {graft(tree_arg(0), tree_arg(1))};
    else if (op == "v")
        result = {v_wrap(tree_arg(0))};
    else if (op == "decompose-over")
        result = decompose_over(tree_arg(0));
    else if (op == "decompose-under")
        result = decompose_under(tree_arg(0));
    else if (op == "info") {
        const Tree t = tree_arg(0);
        if (format == Format::Json)
            std::cout << json{{"tree", render(t)}, {"order", t.order()}, {"index", canonical_index(t)},
                              {"name", canonical_name(t)}}
                             .dump(2)
                      << "\n";
        else
            std::cout << show(t) << "  order " << t.order() << "  index " << canonical_index(t) << "  "
                      << canonical_name(t) << "\n";
        return 0;
    } else
        throw UsageError("unknown tree operation: " + op);

    if (format == Format::Json) {
        json j = json::array();
        for (Tree t : result)
            j.push_back(render(t));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < result.size(); ++i)
        std::cout << (i ? " , " : "") << show(result[i]);
    std::cout << "\n";
    return 0;
}

// ------------------------------------------------------------ check

int run_check(const std::string& suite, const CheckOptions& options, const std::string& corrupt, Format format)
{
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite: " + suite);
    std::unique_ptr<Structures> maps;
    if (corrupt.empty()) {
        maps = Structures::standard();
    } else {
        const auto& known = Structures::corruption_names();
        if (std::find(known.begin(), known.end(), corrupt) == known.end())
            throw UsageError("unknown corruption: " + corrupt);
        maps = Structures::corrupted(corrupt);
    }
    const auto results = run_suite(suite, *maps, options);
    bool passed = true;
    for (const auto& r : results)
        passed = passed && r.passed;
    if (format == Format::Json) {
        json j = {{"suite", suite}, {"order", options.order}, {"structures", maps->name()},
                  {"status", passed ? "pass" : "fail"}, {"laws", json::array()}};
        for (const auto& r : results) {
            json law = {{"suite", r.suite}, {"law", r.law}, {"cases", r.cases}, {"status", r.passed ? "pass" : "fail"}};
            if (!r.passed)
                law["counterexample"] = r.counterexample;
            j["laws"].push_back(law);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results)
            std::cout << format_result(r) << "\n";
        std::size_t failed = 0;
        for (const auto& r : results)
            failed += !r.passed;
        std::cout << (passed ? "all " + std::to_string(results.size()) + " laws hold"
                             : std::to_string(failed) + " of " + std::to_string(results.size()) + " laws fail")
                  << "\n";
    }
    return passed ? 0 : kVerificationFailed;
}

// ------------------------------------------------------------ renorm

struct RenormOptions {
    std::size_t order = 4;
    std::uint64_t seed = 1;
    std::string ring = "scalar";
    std::size_t d = 4;
    bool zero_counterterms = false;
    std::string characters_in;
    std::string characters_out;
};

struct CharacterSet {
    Character u_gamma, u_e, c_gamma, c_e;
};

CharacterSet make_characters(const RenormOptions& o)
{
    if (!o.characters_in.empty()) {
        std::ifstream in(o.characters_in);
        if (!in)
            throw UsageError("cannot read " + o.characters_in);
        const auto j = json::parse(in);
        return {Character::from_json(j.at("U_gamma")), Character::from_json(j.at("U_e")),
                Character::from_json(j.at("C_gamma")), Character::from_json(j.at("C_e"))};
    }
    const auto n = static_cast<std::uint32_t>(o.order);
    const bool matrix = o.ring == "matrix";
    const auto kind = matrix ? Character::Kind::Matrix : Character::Kind::Scalar;
    const std::size_t dim = matrix ? o.d : 0;
    auto u_gamma = make_toy_character(AlgebraTag::Photon, o.seed, kind, o.d, n);
    auto u_e = make_toy_character(AlgebraTag::Electron, o.seed, kind, o.d, n);
    if (o.zero_counterterms)
        return {u_gamma, u_e, Character::zero(AlgebraTag::Charge, dim), Character::zero(AlgebraTag::Electron, dim)};
    // Counterterms stay scalar; they are promoted against matrix U.
    return {u_gamma, u_e, make_toy_character(AlgebraTag::Charge, o.seed, Character::Kind::Scalar, 0, n),
            make_toy_character(AlgebraTag::Electron, o.seed + 1000, Character::Kind::Scalar, 0, n)};
}

std::string latex_ring(const RingValue& v)
{
    if (v.is_scalar()) {
        const Rational& q = v.scalar();
        if (q.get_den() == 1)
            return q.get_num().get_str();
        return std::string(q < 0 ? "-" : "") + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() +
               "}";
    }
    std::string out = "\\begin{pmatrix}";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        for (std::size_t j = 0; j < v.dim(); ++j)
            out += (j ? " & " : "") + latex_ring(RingValue(v.at(i, j)));
        out += i + 1 < v.dim() ? " \\\\ " : "";
    }
    return out + "\\end{pmatrix}";
}

int run_renorm(const RenormOptions& o, Format format)
{
    if (o.ring != "scalar" && o.ring != "matrix")
        throw UsageError("--ring must be scalar or matrix");
    if (o.ring == "matrix" && o.d == 0)
        throw UsageError("--d must be positive for matrix rings");
    const auto chars = make_characters(o);
    if (!o.characters_out.empty()) {
        std::ofstream out(o.characters_out);
        out << json{{"U_gamma", chars.u_gamma.to_json()},
                    {"U_e", chars.u_e.to_json()},
                    {"C_gamma", chars.c_gamma.to_json()},
                    {"C_e", chars.c_e.to_json()}}
                   .dump(2)
            << "\n";
    }
    const auto photon = dyson_check_photon(chars.u_gamma, chars.c_gamma, o.order);
    const auto electron = dyson_check_electron(chars.u_e, chars.c_gamma, chars.c_e, o.order);
    const bool passed = photon.passed && electron.passed;

    if (format == Format::Json) {
        json j = {{"order", o.order},
                  {"seed", o.seed},
                  {"ring", o.ring},
                  {"d", o.ring == "matrix" ? o.d : 0},
                  {"zero_counterterms", o.zero_counterterms},
                  {"photon", photon.to_json()},
                  {"electron", electron.to_json()},
                  {"status", passed ? "pass" : "fail"}};
        std::cout << j.dump(2) << "\n";
    } else if (format == Format::Latex) {
        std::cout << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n";
        std::cout << "% order " << o.order << ", seed " << o.seed << ", ring " << o.ring << "\n";
        std::cout << "\\begin{align*}\n";
        for (std::uint32_t k = 1; k <= std::min<std::size_t>(o.order, 3); ++k)
            for (Tree t : enumerate(k)) {
                std::cout << "\\Delta^{\\gamma}\\, " << render_latex(t) << " &= "
                          << to_text(photon_renorm_coaction(embed_tree(AlgebraTag::Photon, t)), Format::Latex)
                          << " \\\\\n";
                std::cout << "\\Delta^{e}\\, " << render_latex(t) << " &= "
                          << to_text(electron_renorm_coaction(embed_tree(AlgebraTag::Electron, t)), Format::Latex)
                          << " \\\\\n";
            }
        for (const auto* r : {&photon, &electron})
            for (std::size_t k = 0; k < r->residuals.size(); ++k)
                std::cout << "\\text{" << r->equation << "}:\\ [\\alpha^{" << k << "}] &= "
                          << latex_ring(r->residuals[k]) << (k + 1 < r->residuals.size() || r == &photon ? " \\\\" : "")
                          << "\n";
        std::cout << "\\end{align*}\n";
        std::cout << "Status: " << (passed ? "pass" : "fail") << ".\n\\end{document}\n";
    } else {
        for (const auto* r : {&photon, &electron}) {
            std::cout << r->equation << "\n";
            for (std::size_t k = 0; k < r->residuals.size(); ++k)
                std::cout << "  a^" << k << "  residual " << to_string(r->residuals[k]) << "\n";
            std::cout << "  " << (r->passed ? "pass" : "fail at order " + std::to_string(*r->first_failing_order))
                      << "\n";
        }
        std::cout << (passed ? "pass" : "fail") << "\n";
    }
    return passed ? 0 : kVerificationFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hopf algebras of planar binary trees for QED renormalization"};
    app.require_subcommand(1);
    std::string format_name = "ascii";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"ascii", "latex", "json"}))
        ->capture_default_str();

    std::uint32_t enum_order = 0;
    bool count_only = false;
    auto* enum_cmd = app.add_subcommand("enum", "List the trees of one order in canonical order");
    enum_cmd->add_option("n", enum_order, "Tree order")->required();
    enum_cmd->add_flag("--count-only", count_only, "Print only the number of trees");

    std::string map_name, map_input;
    bool list_maps = false;
    auto* map_cmd = app.add_subcommand("map", "Apply a named structure map to an element (\"-\" reads stdin)");
    map_cmd->add_option("name", map_name, "Map name");
    map_cmd->add_option("element", map_input, "Element text or JSON, or - for stdin");
    map_cmd->add_flag("--list", list_maps, "List the map names");

    std::string tree_op;
    std::vector<std::string> tree_args;
    auto* tree_cmd = app.add_subcommand(
        "tree", "Tree operations: over, under, graft, v, decompose-over, decompose-under, info");
    tree_cmd->add_option("op", tree_op, "Operation")->required();
    tree_cmd->add_option("trees", tree_args, "Tree arguments");

    std::string suite = "all";
    std::string corrupt;
    CheckOptions check_options;
    auto* check_cmd = app.add_subcommand("check", "Run a law suite");
    check_cmd->add_option("suite", suite, "Suite name or all")->capture_default_str();
    check_cmd->add_option("--order", check_options.order, "Order of the basis sweeps")->capture_default_str();
    check_cmd->add_option("--jobs", check_options.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    check_cmd->add_option("--seeds", check_options.seeds, "Seeded instances in the series suite")->capture_default_str();
    check_cmd->add_option("--dyson-seeds", check_options.dyson_seeds, "Seeded instances in the Dyson suite")
        ->capture_default_str();
    check_cmd->add_option("--corrupt", corrupt, "Run against a structure with one deliberately broken map");
    bool list_suites = false;
    check_cmd->add_flag("--list", list_suites, "List suites and corruptions");

    RenormOptions renorm;
    auto* renorm_cmd = app.add_subcommand("renorm", "Check the Dyson relations on seeded toy characters");
    renorm_cmd->alias("renorm-demo");
    renorm_cmd->add_option("--order", renorm.order, "Truncation order")->capture_default_str();
    renorm_cmd->add_option("--seed", renorm.seed, "Seed of the toy characters")->capture_default_str();
    renorm_cmd->add_option("--ring", renorm.ring, "scalar or matrix")
        ->check(CLI::IsMember({"scalar", "matrix"}))
        ->capture_default_str();
    renorm_cmd->add_option("--d", renorm.d, "Matrix dimension")->capture_default_str();
    renorm_cmd->add_flag("--zero-counterterms", renorm.zero_counterterms, "Use vanishing counterterms");
    renorm_cmd->add_option("--characters", renorm.characters_in, "Read U and C from a JSON file");
    renorm_cmd->add_option("--save-characters", renorm.characters_out, "Write U and C to a JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        const Format format = parse_format(format_name);
        if (enum_cmd->parsed())
            return run_enum(enum_order, count_only, format);
        if (tree_cmd->parsed())
            return run_tree(tree_op, tree_args, format);
        if (check_cmd->parsed()) {
            if (list_suites) {
                std::cout << "suites:";
                for (const auto& s : suite_names())
                    std::cout << " " << s;
                std::cout << "\ncorruptions:";
                for (const auto& c : Structures::corruption_names())
                    std::cout << " " << c;
                std::cout << "\n";
                return 0;
            }
            return run_check(suite, check_options, corrupt, format);
        }
        if (renorm_cmd->parsed())
            return run_renorm(renorm, app.get_option("--format")->count() ? format : Format::Json);
        if (map_cmd->parsed()) {
            const auto structures = Structures::standard();
            const auto maps = named_maps(*structures);
            if (list_maps) {
                for (const auto& [name, m] : maps) {
                    std::string input;
                    for (auto tag : m.input)
                        input += (input.empty() ? "" : " (x) ") + std::string(tag_name(tag));
                    std::cout << name << "  [" << input << "]  " << m.help << "\n";
                }
                return 0;
            }
            if (map_name.empty() || map_input.empty())
                throw UsageError("map needs a name and an element");
            const auto it = maps.find(map_name);
            if (it == maps.end())
                throw UsageError("unknown map: " + map_name + " (see map --list)");
            const Tensor x = parse_input(it->second.input, read_input(map_input));
            std::cout << emit(it->second.apply(x), format) << "\n";
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
