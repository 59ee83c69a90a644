#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "supertwist/suite.hpp"

using namespace supertwist;
using json = nlohmann::ordered_json;

namespace
{

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

void print_value(std::ostream& os, const json& j, int indent);

std::string scalar_text(const json& j)
{
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_flat(const json& j)
{
    if (!j.is_array()) return !j.is_object();
    for (const auto& x : j)
        if (x.is_array() || x.is_object()) return false;
    return true;
}

void print_value(std::ostream& os, const json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_flat(v)) {
                os << pad << k << ": ";
                if (v.is_array()) {
                    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
                } else {
                    os << scalar_text(v);
                }
                os << "\n";
            } else {
                os << pad << k << ":\n";
                print_value(os, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (x.is_object()) {
                os << pad << "-\n";
                print_value(os, x, indent + 2);
            } else {
                os << pad << "- ";
                if (is_flat(x)) {
                    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar_text(x[i]);
                    os << "\n";
                } else {
                    os << "\n";
                    print_value(os, x, indent + 2);
                }
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

// One line per ordering line; the maximal root is bracketed.
void print_roots(std::ostream& os, const json& j)
{
    os << j["algebra"].get<std::string>() << ": " << j["positive_roots"].get<std::size_t>() << " positive roots\n";
    std::size_t n = 0;
    for (const auto& line : j["lines"]) {
        os << "  line " << ++n << ":";
        if (line.contains("extra")) os << " (" << line["extra"]["root"].get<std::string>() << " " << line["extra"]["parity"].get<std::string>() << ", extra)";
        for (const auto& r : line["roots"]) {
            const bool m = r["maximal"].get<bool>();
            os << " " << (m ? "[" : "") << r["root"].get<std::string>() << " " << r["parity"].get<std::string>() << (m ? "]" : "");
        }
        os << "\n";
    }
}

const char* backend_text(Backend b)
{
    switch (b) {
    case Backend::matrix: return "matrix";
    case Backend::formal: return "formal";
    case Backend::both: return "both";
    }
    return "?";
}

json config_json(const std::string& command, const RunConfig& c)
{
    json j;
    j["command"] = command;
    j["algebra"] = c.algebra;
    j["backend"] = backend_text(c.backend);
    j["K"] = c.order;
    j["odd_square_mode"] = c.odd_mode == OddSquareMode::grassmann ? "grassmann" : "clifford";
    if (c.stage) j["stage"] = *c.stage;
    if (c.jordanian_odd) j["jordanian_odd"] = true;
    if (c.pair_sign == PairSign::literal) j["pair_sign"] = "literal";
    j["seed"] = c.seed;
    return j;
}

int emit(const std::string& command, const RunConfig& cfg, const SuiteResult& r, bool as_json)
{
    std::size_t info = 0;
    for (const auto& e : r.report.entries()) info += e.status == Status::info;
    const std::size_t checks = r.report.entries().size() - info;
    const std::size_t failures = r.report.failures();
    if (as_json) {
        json out;
        out["config"] = config_json(command, cfg);
        out["result"] = r.result;
        out["report"] = r.report.to_json();
        out["summary"] = {{"checks", checks}, {"failures", failures}, {"notes", info}, {"passed", failures == 0}};
        std::cout << out.dump(2) << "\n";
    } else {
        if (command == "roots") print_roots(std::cout, r.result);
        else print_value(std::cout, r.result, 0);
        if (!r.report.entries().empty()) std::cout << "\n" << r.report.to_text();
        std::cout << "\n" << checks << " checks, " << failures << " failures, " << info << " notes\n";
    }
    return failures == 0 ? exit_pass : exit_fail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Jordanian r-matrices and twists for gl(m|n), sl(m|n) and osp(M|2n), with exact verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string backend = "both", pair_sign = "invariant";
    bool grassmann = false, clifford = false, as_json = false;
    std::size_t stage = 0;
    std::vector<std::string> overrides;

    const auto common = [&](CLI::App* sub, bool needs_algebra) {
        auto* a = sub->add_option("algebra", cfg.algebra, "algebra, e.g. sl(2|1), gl(1|1), osp(1|4)");
        if (needs_algebra) a->required();
        sub->add_option("-K,--order", cfg.order, "truncation order in the parameters (formal backend)")->check(CLI::Range(1u, Ring::max_order));
        sub->add_option("--backend", backend, "matrix, formal or both")->check(CLI::IsMember({"matrix", "formal", "both"}));
        auto* g = sub->add_flag("--grassmann", grassmann, "odd parameters square to zero (default)");
        auto* c = sub->add_flag("--clifford", clifford, "odd parameters keep a symbolic square");
        g->excludes(c);
        sub->add_flag("--json", as_json, "print a JSON report");
        sub->add_option("--seed", cfg.seed, "seed for randomized checks");
        sub->add_option("--stage", stage, "restrict to one chain stage (1-based)")->check(CLI::PositiveNumber);
        sub->add_option("--xi-parity", overrides, "stage=parity, e.g. 1=odd; must match the parity of e_theta");
        sub->add_option("--pair-sign", pair_sign, "sign rule for extension pairs")->check(CLI::IsMember({"invariant", "literal"}));
    };

    auto* roots = app.add_subcommand("roots", "positive roots, parities and the normal ordering");
    common(roots, true);
    auto* rmatrix = app.add_subcommand("rmatrix", "one stage r-matrix: CYBE, co-commuting subalgebra");
    common(rmatrix, true);
    rmatrix->add_flag("--jordanian-odd", cfg.jordanian_odd, "keep only the Jordanian term of an odd e_theta");
    rmatrix->add_flag("--examples", cfg.examples, "also check the listed example r-matrices of this algebra");
    auto* chain = app.add_subcommand("chain", "the full chain of r-matrices");
    common(chain, true);
    chain->add_flag("--examples", cfg.examples, "also check the listed example r-matrices of this algebra");
    auto* twist = app.add_subcommand("twist", "twists, twisted coproducts and antipodes, foldings, chain twist");
    common(twist, true);
    twist->add_flag("--jordanian-odd", cfg.jordanian_odd, "keep only the Jordanian term of an odd e_theta");
    auto* selftest = app.add_subcommand("selftest", "engine properties on all (or one) algebras");
    common(selftest, false);
    selftest->add_option("--samples", cfg.samples, "randomized products per algebra")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    cfg.backend = backend == "matrix" ? Backend::matrix : backend == "formal" ? Backend::formal : Backend::both;
    cfg.odd_mode = clifford ? OddSquareMode::clifford : OddSquareMode::grassmann;
    cfg.pair_sign = pair_sign == "literal" ? PairSign::literal : PairSign::invariant;
    if (stage) cfg.stage = stage;

    try {
        for (const auto& o : overrides) {
            const auto eq = o.find('=');
            if (eq == std::string::npos) throw UsageError("--xi-parity expects stage=parity, got '" + o + "'");
            const std::string p = o.substr(eq + 1);
            if (p != "even" && p != "odd") throw UsageError("--xi-parity: parity must be even or odd, got '" + p + "'");
            cfg.xi_parity[std::stoul(o.substr(0, eq))] = p == "odd" ? Parity::odd : Parity::even;
        }
        if (!cfg.algebra.empty()) (void)parse_algebra(cfg.algebra);

        if (roots->parsed()) return emit("roots", cfg, roots_suite(cfg), as_json);
        if (rmatrix->parsed()) return emit("rmatrix", cfg, rmatrix_suite(cfg, false), as_json);
        if (chain->parsed()) return emit("chain", cfg, rmatrix_suite(cfg, true), as_json);
        if (twist->parsed()) return emit("twist", cfg, twist_suite(cfg), as_json);
        if (selftest->parsed()) return emit("selftest", cfg, selftest_suite(cfg), as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
