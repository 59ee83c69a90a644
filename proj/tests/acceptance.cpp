// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "supertwist/suite.hpp"

using namespace supertwist;

namespace
{

struct Outcome
{
    VerificationReport report;
    std::vector<std::string> failures; // failures found outside the report
    std::vector<std::string> remarks;
    std::size_t required = 0;

    void require(bool ok, const std::string& what)
    {
        ++required;
        if (!ok) failures.push_back(what);
    }
};

int failed_criteria = 0;

void run(int n, const std::string& title, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<std::string> bad = o.failures;
    std::size_t checks = std::max(o.required, o.failures.size());
    for (const auto& e : o.report.entries()) {
        if (e.status == Status::info) continue;
        ++checks;
        if (e.status == Status::fail) bad.push_back(e.identity + " (" + e.backend + ")");
    }
    const bool ok = bad.empty();
    failed_criteria += ok ? 0 : 1;
    std::printf("criterion %d: %s - %s [%zu checks, %zu failed, %.1fs]\n", n, ok ? "PASS" : "FAIL", title.c_str(), checks, bad.size(), secs);
    for (const auto& b : bad) std::printf("    failed: %s\n", b.c_str());
    for (const auto& r : o.remarks) std::printf("    note: %s\n", r.c_str());
    std::fflush(stdout);
}

template <class Alg>
StandardLegs<Alg> legs_of(const std::shared_ptr<const SuperAlgebra>& g, const RingPtr& ring)
{
    return {std::make_shared<Alg>(g), ring};
}

constexpr unsigned K = 4;

const std::vector<std::string> chain_algebras{"sl(2|1)", "sl(2|2)", "sl(3|1)", "osp(1|2)", "osp(1|4)", "osp(3|2)", "osp(2|2)"};

/// Both backends: matrix with exact coefficients, formal truncated at `order`.
template <class F>
void both(const ChainSpec& chain, unsigned order, F&& f)
{
    f(legs_of<MatrixAlgebra>(chain.alg, chain.ring(Ring::max_order, true)), 0u);
    f(legs_of<EnvelopingAlgebra>(chain.alg, chain.ring(order)), order);
}

// --- 1 -----------------------------------------------------------------------

void cybe(Outcome& o)
{
    for (const auto& ex : example_rmatrices()) {
        cybe_check(ex.build(Ring::make(ex.params, Ring::max_order, true)), legs_of<MatrixAlgebra>(ex.alg, Ring::make(ex.params, Ring::max_order, true)),
                   o.report, ex.label, ex.formula, 0);
        const auto ring = Ring::make(ex.params, K);
        const auto legs = legs_of<EnvelopingAlgebra>(ex.alg, ring);
        cybe_check(ex.build(ring), legs, o.report, ex.label, ex.formula, K);
        invariance_note(ex.build(ring), legs, o.report, ex.label, K);
    }
    for (const auto& name : chain_algebras) {
        const auto chain = build_chain(parse_algebra(name));
        both(chain, K, [&](const auto& legs, unsigned order) {
            for (std::size_t i = 1; i <= chain.stages.size(); ++i)
                cybe_check(chain.partial_sum(i, legs.ring), legs, o.report, name + " r_1 + ... + r_" + std::to_string(i), "chain sum", order);
        });
    }
    for (const auto& e : o.report.entries())
        if (e.status == Status::info) o.remarks.push_back(e.identity + ": " + e.residual_text);
}

// --- 2 -----------------------------------------------------------------------

void propositions(Outcome& o)
{
    // subalgebras named in the reduction statements, by basis element
    const std::map<std::string, std::vector<std::string>> named{
        {"sl(2|2)", {"h2", "h3", "e{2-3}", "f{2-3}"}},
        {"sl(3|1)", {"h2", "h3", "e{2-3}", "f{2-3}"}},
        {"osp(1|4)", {"h2", "e{2}", "f{2}", "e{2+2}", "f{2+2}"}},
    };
    for (const auto& name : chain_algebras) {
        const auto chain = build_chain(parse_algebra(name));
        const auto legs = legs_of<MatrixAlgebra>(chain.alg, chain.ring(Ring::max_order, true));
        for (std::size_t i = 0; i < chain.stages.size(); ++i) {
            kernel_checks(chain, i, legs, o.report, 0);
            o.require(chain.stages[i].kernel_full.closed, stage_label(chain, i) + ": kernel is a subalgebra");
        }
        auto it = named.find(name);
        if (it == named.end()) continue;
        const auto r = chain.partial_sum(1, legs.ring);
        for (const auto& b : it->second) {
            const auto x = LieElement::basis(chain.alg->at(b));
            o.require(chain.stages[0].kernel_full.contains(*chain.alg, x), name + " stage 1: kernel contains " + b);
            o.require(cobracket(x, r, legs).is_zero(), name + " stage 1: " + b + " co-commutes");
        }
    }
}

// --- 3 -----------------------------------------------------------------------

void reductions(Outcome& o)
{
    const auto a = build_chain(parse_algebra("sl(2|2)")).reduction_chain();
    const auto b = build_chain(parse_algebra("osp(1|4)")).reduction_chain();
    const auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " > ") + x;
        return s;
    };
    o.require(a == std::vector<std::string>{"gl(2|2)", "gl(1|1)"}, "sl(2|2) chain is " + join(a));
    o.require(b == std::vector<std::string>{"osp(1|4)", "osp(1|2)"}, "osp(1|4) chain is " + join(b));
    o.remarks.push_back("sl(2|2): " + join(a) + "; osp(1|4): " + join(b));
}

// --- 4, 5, 6 -----------------------------------------------------------------

const std::vector<std::string> stage_algebras{"gl(1|1)", "sl(2|1)", "osp(1|2)", "osp(1|4)"};
const std::vector<std::string> chain_twist_algebras{"sl(2|2)", "osp(1|4)"};

template <class Legs>
using AlgOf = typename std::decay_t<decltype(std::declval<Legs>().alg)>::element_type;

void twist_axioms(Outcome& o)
{
    for (const auto& name : stage_algebras) {
        const auto chain = build_chain(parse_algebra(name));
        both(chain, K, [&](const auto& legs, unsigned order) {
            using Alg = AlgOf<decltype(legs)>;
            verify_twist_axioms(StageTwist<Alg>(chain.alg, chain.stages[0].spec, legs.ring), legs, o.report, stage_label(chain, 0), order);
        });
    }
    for (const auto& name : chain_twist_algebras) {
        const auto chain = build_chain(parse_algebra(name));
        o.require(chain.stages.size() == 2, name + " has a two-stage chain");
        both(chain, K, [&](const auto& legs, unsigned order) {
            using Alg = AlgOf<decltype(legs)>;
            verify_twist_axioms(ChainTwist<Alg>(chain, legs.ring), legs, o.report, chain.alg->name() + " chain", order);
        });
    }
}

void closed_forms(Outcome& o)
{
    for (const auto& name : stage_algebras) {
        const auto chain = build_chain(parse_algebra(name));
        both(chain, K, [&](const auto& legs, unsigned order) {
            using Alg = AlgOf<decltype(legs)>;
            verify_closed_forms(StageTwist<Alg>(chain.alg, chain.stages[0].spec, legs.ring), legs, o.report, stage_label(chain, 0), order);
        });
    }
    std::size_t corrected = 0, corrected_ok = 0;
    for (const auto& e : o.report.entries())
        if (e.identity.find("odd e_theta form") != std::string::npos) {
            ++corrected;
            corrected_ok += e.status == Status::pass;
        }
    o.remarks.push_back("for odd e_theta the forms e_gamma' (x) exp(2t sigma) + exp(-2 sigma) (x) e_gamma' and -e_gamma' exp(-2(t-1) sigma) hold in " +
                        std::to_string(corrected_ok) + " of " + std::to_string(corrected) + " checks");
}

void triangularity(Outcome& o)
{
    for (const auto& name : stage_algebras) {
        const auto chain = build_chain(parse_algebra(name));
        both(chain, K, [&](const auto& legs, unsigned order) {
            using Alg = AlgOf<decltype(legs)>;
            const StageTwist<Alg> st(chain.alg, chain.stages[0].spec, legs.ring);
            verify_universal_R(st, legs, stage_rmatrix(*chain.alg, chain.stages[0].spec, legs.ring), st.generators(), o.report, stage_label(chain, 0),
                               order);
        });
    }
    for (const auto& name : chain_twist_algebras) {
        const auto chain = build_chain(parse_algebra(name));
        const auto legs = legs_of<MatrixAlgebra>(chain.alg, chain.ring(Ring::max_order, true));
        const ChainTwist<MatrixAlgebra> ct(chain, legs.ring);
        verify_universal_R(ct, legs, chain.total(legs.ring), {}, o.report, chain.alg->name() + " chain", 0);
    }
}

// --- 7 -----------------------------------------------------------------------

void folding(Outcome& o)
{
    // identities named by the criterion; the rest of the folding report is informational
    const std::vector<std::string> gated{"left and right foldings agree", "u by the product formula", "u by the exponential formula",
                                         "u u^-1 = 1", "sqrt(u)^2 = u"};
    VerificationReport all;
    for (const auto& name : {"osp(1|2)", "sl(2|1)", "osp(1|4)", "sl(2|2)"}) {
        const auto chain = build_chain(parse_algebra(name));
        const auto legs = legs_of<EnvelopingAlgebra>(chain.alg, chain.ring(3));
        folding_suite(StageTwist<EnvelopingAlgebra>(chain.alg, chain.stages[0].spec, legs.ring), legs, all, stage_label(chain, 0), 3);
    }
    for (const auto& e : all.entries()) {
        bool in = false;
        for (const auto& g : gated) in = in || e.identity.find(": " + g) != std::string::npos;
        if (in)
            o.report.add(e);
        else if (e.status == Status::fail)
            o.remarks.push_back("outside the criterion, fails: " + e.identity);
    }
    for (const auto& name : {"sl(2|2)", "osp(1|4)"}) {
        const auto chain = build_chain(parse_algebra(name));
        const auto legs = legs_of<EnvelopingAlgebra>(chain.alg, chain.ring(3));
        auto [kernel, other] = kernel_split(chain.stages[0]);
        o.require(!kernel.empty(), std::string(name) + ": stage 1 kernel generators");
        // every computed kernel element is gated, not only the reduced subalgebra
        kernel.insert(kernel.end(), other.begin(), other.end());
        verify_w_trivialization(StageTwist<EnvelopingAlgebra>(chain.alg, chain.stages[0].spec, legs.ring), legs, kernel, o.report,
                                stage_label(chain, 0), 3);
    }
    for (const auto& e : o.report.entries())
        if (e.status == Status::info) o.remarks.push_back(e.identity + ": " + e.residual_text);
}

// --- 8 -----------------------------------------------------------------------

void odd_branch(Outcome& o)
{
    RunConfig cfg;
    cfg.algebra = "gl(1|1)";
    cfg.jordanian_odd = true;
    const auto chain = configured_chain(cfg);
    const auto& spec = chain.stages[0].spec;
    o.require(spec.parameter.parity == Parity::odd && spec.parameter.odd_square_mode == OddSquareMode::grassmann, "gl(1|1) parameter is a grassmann eta");
    both(chain, K, [&](const auto& legs, unsigned order) {
        using Alg = AlgOf<decltype(legs)>;
        const StageTwist<Alg> st(chain.alg, spec, legs.ring);
        const std::string label = stage_label(chain, 0);
        cybe_check(stage_rmatrix(*chain.alg, spec, legs.ring), legs, o.report, label, "eta (h1 - h2)/2 ^ e{1-2}", order);
        verify_sigma_branch(st, legs, o.report, label, order);
        verify_twist_axioms(st, legs, o.report, label, order);
        verify_closed_forms(st, legs, o.report, label, order);
    });
}

// --- 9 -----------------------------------------------------------------------

void engine(Outcome& o)
{
    std::set<std::string> seen;
    for (const auto& name : default_algebras()) {
        for (const auto& g : {parse_algebra(name), *working_algebra(parse_algebra(name))}) {
            if (!seen.insert(g.name()).second) continue;
            lie_axioms(g, o.report);
            engine_properties(g, 20240601, 100, o.report);
        }
    }
}

} // namespace

int main()
{
    run(1, "CYBE for the example and chain r-matrices", cybe);
    run(2, "kernels co-commute and contain the named subalgebras", propositions);
    run(3, "reduction chains", reductions);
    run(4, "twist cocycle and counit conditions", twist_axioms);
    run(5, "closed forms of the twisted coproduct and antipode", closed_forms);
    run(6, "triangularity and first order of R", triangularity);
    run(7, "foldings, u, sqrt(u) and w trivialization", folding);
    run(8, "odd parameter branch for gl(1|1)", odd_branch);
    run(9, "Lie axioms and engine properties", engine);
    std::printf("%d of 9 criteria failed\n", failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
