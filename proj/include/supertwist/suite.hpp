#ifndef SUPERTWIST_SUITE_HPP
#define SUPERTWIST_SUITE_HPP

// Runs of the verification suites behind the command line: root listings,
// r-matrix and chain checks, twist checks and engine self tests. Each run
// returns a report plus a small JSON result; nothing here prints.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "supertwist/hopf.hpp"
#include "supertwist/report.hpp"
#include "supertwist/rmatrix.hpp"
#include "supertwist/twist.hpp"

namespace supertwist
{

enum class Backend { matrix, formal, both };

inline bool uses_matrix(Backend b) { return b != Backend::formal; }
inline bool uses_formal(Backend b) { return b != Backend::matrix; }

/// Raised for configurations that cannot be run at all (bad overrides, bad stage).
struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct RunConfig
{
    std::string algebra;
    Backend backend = Backend::both;
    unsigned order = 4;
    OddSquareMode odd_mode = OddSquareMode::grassmann;
    std::map<std::size_t, Parity> xi_parity; // 1-based stage -> requested parity
    std::optional<std::size_t> stage;        // 1-based
    bool jordanian_odd = false;
    bool examples = false;
    PairSign pair_sign = PairSign::invariant;
    std::uint64_t seed = 1;
    unsigned samples = 100;
};

struct SuiteResult
{
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    VerificationReport report;
};

// --- chains ------------------------------------------------------------------

/// The chain for a config, with the parity overrides validated and the
/// optional restriction to the plain Jordanian term applied.
inline ChainSpec configured_chain(const RunConfig& cfg)
{
    ChainOptions opt;
    opt.odd_mode = cfg.odd_mode;
    opt.pair_sign = cfg.pair_sign;
    ChainSpec chain = build_chain(parse_algebra(cfg.algebra), opt);
    for (const auto& [i, p] : cfg.xi_parity) {
        if (i < 1 || i > chain.stages.size()) throw UsageError("parity override for stage " + std::to_string(i) + ", which does not exist");
        const Parity need = chain.alg->parity(chain.stages[i - 1].spec.carrier.e_theta);
        if (p != need)
            throw UsageError("stage " + std::to_string(i) + ": the parameter must be " + to_string(need) + " like e_theta, not " + to_string(p));
    }
    if (cfg.stage && (*cfg.stage < 1 || *cfg.stage > chain.stages.size()))
        throw UsageError("stage " + std::to_string(*cfg.stage) + " out of range 1.." + std::to_string(chain.stages.size()));
    if (cfg.jordanian_odd) {
        const std::size_t i = cfg.stage.value_or(1) - 1;
        auto& c = chain.stages[i].spec.carrier;
        if (!is_odd(chain.alg->parity(c.e_theta))) throw UsageError("--jordanian-odd needs an odd e_theta, stage " + std::to_string(i + 1) + " has an even one");
        c.pairs.clear();
        c.half.reset();
        c.half_root.reset();
    }
    return chain;
}

inline std::vector<std::size_t> selected_stages(const ChainSpec& chain, const RunConfig& cfg)
{
    if (cfg.stage) return {*cfg.stage - 1};
    std::vector<std::size_t> v(chain.stages.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

inline std::string stage_label(const ChainSpec& chain, std::size_t i)
{
    return chain.alg->name() + " stage " + std::to_string(i + 1);
}

/// Matrix runs are exact; formal runs truncate at the configured order.
inline RingPtr backend_ring(const ChainSpec& chain, bool matrix, unsigned order)
{
    return matrix ? chain.ring(Ring::max_order, true) : chain.ring(order);
}

// --- roots -------------------------------------------------------------------

inline SuiteResult roots_suite(const RunConfig& cfg)
{
    const SuperAlgebra alg = parse_algebra(cfg.algebra);
    SuiteResult out;
    out.result["algebra"] = alg.name();
    auto lines = nlohmann::ordered_json::array();
    for (const auto& line : alg.ordering().lines) {
        nlohmann::ordered_json l;
        auto roots = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < line.roots.size(); ++k)
            roots.push_back({{"root", line.roots[k].str()}, {"parity", to_string(line.roots[k].parity)}, {"maximal", k == line.maximal}});
        l["roots"] = roots;
        if (line.extra) l["extra"] = {{"root", line.extra->str()}, {"parity", to_string(line.extra->parity)}};
        lines.push_back(std::move(l));
    }
    out.result["positive_roots"] = alg.positive_roots().size();
    out.result["lines"] = lines;
    return out;
}

// --- r-matrices --------------------------------------------------------------

template <class Alg>
void cybe_check(const LieTwoTensor& r, const StandardLegs<Alg>& legs, VerificationReport& rep, const std::string& label,
                const std::string& formula, unsigned order)
{
    const auto res = cybe_residual(r, legs);
    rep.check(res.is_zero(), label + ": CYBE", formula + " satisfies [r12, r13] + [r12, r23] + [r13, r23] = 0", backend_name<Alg>(), order,
              clip(res.str()));
}

/// For a residual that does not vanish: is it at least g-invariant.
template <class Alg>
void invariance_note(const LieTwoTensor& r, const StandardLegs<Alg>& legs, VerificationReport& rep, const std::string& label,
                     unsigned order)
{
    const auto res = cybe_residual(r, legs);
    if (res.is_zero()) return;
    const auto d = legs.delta2();
    bool inv = true;
    for (std::size_t i = 0; i < legs.alg->lie().dim() && inv; ++i)
        inv = supercommutator(d(LieElement::basis(static_cast<std::uint32_t>(i))), res).is_zero();
    rep.note(label + ": CYBE residual", std::string("the residual is ") + (inv ? "" : "not ") + "g-invariant (modified CYBE " +
                                            (inv ? "holds" : "fails") + ")",
             backend_name<Alg>(), order);
}

template <class Alg>
void kernel_checks(const ChainSpec& chain, std::size_t i, const StandardLegs<Alg>& legs, VerificationReport& rep, unsigned order)
{
    const auto& alg = *chain.alg;
    const auto& st = chain.stages[i];
    const std::string label = stage_label(chain, i);
    const auto r = chain.partial_sum(i + 1, legs.ring);
    for (const auto& x : st.kernel_full.basis) {
        const auto c = cobracket(x, r, legs);
        rep.check(c.is_zero(), label + ": cobracket of " + alg.element_string(x), "[x (x) 1 + 1 (x) x, r_1 + ... + r_i] = 0", backend_name<Alg>(),
                  order, clip(c.str()));
    }
    for (auto g : st.reduced.generators) {
        const auto c = cobracket(LieElement::basis(g), r, legs);
        rep.check(c.is_zero(), label + ": " + st.reduced.name + " generator " + alg.basis(g).name + " co-commutes",
                  "[x (x) 1 + 1 (x) x, r_1 + ... + r_i] = 0", backend_name<Alg>(), order, clip(c.str()));
    }
}

template <class Alg>
void stage_rmatrix_checks(const ChainSpec& chain, std::size_t i, const StandardLegs<Alg>& legs, VerificationReport& rep, unsigned order)
{
    const std::string label = stage_label(chain, i);
    cybe_check(stage_rmatrix(*chain.alg, chain.stages[i].spec, legs.ring), legs, rep, label, "r_" + std::to_string(i + 1), order);
    if (i > 0) cybe_check(chain.partial_sum(i + 1, legs.ring), legs, rep, label + " partial sum", "r_1 + ... + r_" + std::to_string(i + 1), order);
    kernel_checks(chain, i, legs, rep, order);
}

inline nlohmann::ordered_json stage_json(const ChainSpec& chain, std::size_t i)
{
    const auto& alg = *chain.alg;
    const auto& st = chain.stages[i];
    const auto& c = st.spec.carrier;
    nlohmann::ordered_json j;
    j["stage"] = i + 1;
    j["theta"] = c.theta.str();
    j["h_theta"] = alg.element_string(c.h_theta);
    j["e_theta"] = alg.element_string(c.e_theta);
    j["parameter"] = {{"name", st.spec.parameter.name}, {"parity", to_string(st.spec.parameter.parity)}};
    j["order"] = c.order();
    j["maximal"] = c.maximal;
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& p : c.pairs)
        pairs.push_back({{"gamma", p.gamma.str()}, {"partner", p.partner.str()}, {"t", p.t.str()}, {"sign", p.sign.str()},
                         {"e_gamma", alg.element_string(p.plus)}, {"e_partner", alg.element_string(p.minus)}});
    j["pairs"] = pairs;
    if (c.half) j["half"] = {{"root", c.half_root->str()}, {"element", alg.element_string(*c.half)}};
    if (st.spec.extra) j["extra_jordanian"] = {{"root", st.spec.extra->root.str()}, {"parameter", st.spec.extra->parameter.name}};
    j["r"] = [&] {
        const auto ring = chain.ring(1);
        const LieTwoTensor r = stage_rmatrix(alg, st.spec, ring);
        std::string s;
        const auto el = [&](const LieElement& x) { return x.terms().size() > 1 ? "(" + alg.element_string(x) + ")" : alg.element_string(x); };
        for (const auto& t : r.terms()) s += (s.empty() ? "" : " + ") + ("(" + t.coef.str() + ") " + el(t.left) + " (x) " + el(t.right));
        return s;
    }();
    auto kb = nlohmann::ordered_json::array();
    for (const auto& x : st.kernel_full.basis) kb.push_back(alg.element_string(x));
    j["kernel_dim"] = st.kernel_full.basis.size();
    j["kernel_basis"] = kb;
    j["kernel_borel_dim"] = st.kernel_borel.basis.size();
    j["kernel_closed"] = st.kernel_full.closed;
    j["standard_subalgebra"] = st.reduced.name;
    return j;
}

inline void structural_checks(const ChainSpec& chain, std::size_t i, VerificationReport& rep)
{
    const std::string label = stage_label(chain, i);
    const auto& st = chain.stages[i];
    std::string problems;
    for (const auto& p : st.carrier_problems) problems += (problems.empty() ? "" : "; ") + p;
    rep.check(st.carrier_problems.empty(), label + ": carrier relations",
              "[h, e] = e, [h, e_gamma] = (1 - t) e_gamma, [h, e_gamma'] = t e_gamma', [e_gamma, e_gamma'] = e_theta, other brackets vanish",
              "-", 0, problems);
    rep.check(st.kernel_full.closed, label + ": co-commuting subspace is a subalgebra", "[ker, ker] in ker", "-", 0,
              st.kernel_full.problems.empty() ? "" : st.kernel_full.problems.front());
}

template <class Alg>
void example_checks(const StandardLegs<Alg>& legs_template, const ExampleRMatrix& ex, const RingPtr& ring, VerificationReport& rep,
                    unsigned order)
{
    StandardLegs<Alg> legs{legs_template.alg, ring};
    const auto r = ex.build(ring);
    cybe_check(r, legs, rep, ex.label, ex.formula, order);
    invariance_note(r, legs, rep, ex.label, order);
}

inline void examples_suite(const RunConfig& cfg, const std::string& algebra_name, SuiteResult& out)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& ex : example_rmatrices(cfg.odd_mode)) {
        if (ex.alg->name() != algebra_name) continue;
        arr.push_back({{"label", ex.label}, {"r", ex.formula}});
        if (uses_matrix(cfg.backend)) {
            const StandardLegs<MatrixAlgebra> l{std::make_shared<MatrixAlgebra>(ex.alg), nullptr};
            example_checks(l, ex, Ring::make(ex.params, Ring::max_order, true), out.report, 0);
        }
        if (uses_formal(cfg.backend)) {
            const StandardLegs<EnvelopingAlgebra> l{std::make_shared<EnvelopingAlgebra>(ex.alg), nullptr};
            example_checks(l, ex, Ring::make(ex.params, cfg.order), out.report, cfg.order);
        }
    }
    out.result["examples"] = arr;
}

/// One stage (`chain` = false) or every stage plus the chain sums.
inline SuiteResult rmatrix_suite(const RunConfig& cfg, bool whole_chain)
{
    const ChainSpec chain = configured_chain(cfg);
    SuiteResult out;
    out.result["algebra"] = cfg.algebra;
    out.result["working_algebra"] = chain.alg->name();
    std::vector<std::size_t> idx;
    if (whole_chain)
        for (std::size_t i = 0; i < chain.stages.size(); ++i) idx.push_back(i);
    else
        idx = {cfg.stage.value_or(1) - 1};
    auto stages = nlohmann::ordered_json::array();
    for (auto i : idx) {
        stages.push_back(stage_json(chain, i));
        structural_checks(chain, i, out.report);
        if (i > 0)
            out.report.check(chain.stages[i].carrier_in_previous_kernel, stage_label(chain, i) + ": carrier inside the previous kernel",
                             "all carrier elements co-commute with r_1 + ... + r_{i-1}", "-", 0);
    }
    out.result["stages"] = stages;
    if (uses_matrix(cfg.backend)) {
        const StandardLegs<MatrixAlgebra> legs{std::make_shared<MatrixAlgebra>(chain.alg), backend_ring(chain, true, cfg.order)};
        for (auto i : idx) stage_rmatrix_checks(chain, i, legs, out.report, 0);
    }
    if (uses_formal(cfg.backend)) {
        const StandardLegs<EnvelopingAlgebra> legs{std::make_shared<EnvelopingAlgebra>(chain.alg), backend_ring(chain, false, cfg.order)};
        for (auto i : idx) stage_rmatrix_checks(chain, i, legs, out.report, cfg.order);
    }
    if (whole_chain) {
        out.result["reduction_chain"] = chain.reduction_chain();
        out.result["chain"] = chain_to_json(chain);
    }
    if (cfg.examples) examples_suite(cfg, parse_algebra(cfg.algebra).name(), out);
    return out;
}

// --- twists ------------------------------------------------------------------

/// Named subalgebra generators of a stage, and the other kernel basis elements.
inline std::pair<std::vector<LieElement>, std::vector<LieElement>> kernel_split(const ChainStage& st)
{
    std::vector<LieElement> named, other;
    for (auto i : st.reduced.generators) named.push_back(LieElement::basis(i));
    for (const auto& x : st.kernel_full.basis) {
        bool in = false;
        for (const auto& y : named) in = in || x == y;
        if (!in) other.push_back(x);
    }
    return {named, other};
}

template <class Alg>
void stage_twist_checks(const ChainSpec& chain, std::size_t i, const StandardLegs<Alg>& legs, VerificationReport& rep, unsigned order)
{
    const std::string label = stage_label(chain, i);
    const StageTwist<Alg> st(chain.alg, chain.stages[i].spec, legs.ring);
    verify_twist_axioms(st, legs, rep, label, order);
    verify_extension_forms(st, legs, rep, label, order);
    verify_sigma_branch(st, legs, rep, label, order);
    verify_closed_forms(st, legs, rep, label, order);
    verify_universal_R(st, legs, stage_rmatrix(*chain.alg, chain.stages[i].spec, legs.ring), st.generators(), rep, label, order);
    verify_twisted_hopf(st, legs, st.generators(), rep, label, order);
    if constexpr (std::is_same_v<Alg, EnvelopingAlgebra>) folding_suite(st, legs, rep, label, order);
    const auto [named, other] = kernel_split(chain.stages[i]);
    verify_w_trivialization(st, legs, named, rep, label, order, other);
}

template <class Alg>
void chain_twist_checks(const ChainSpec& chain, const StandardLegs<Alg>& legs, VerificationReport& rep, unsigned order)
{
    const std::string label = chain.alg->name() + " chain";
    const ChainTwist<Alg> ct(chain, legs.ring);
    verify_twist_axioms(ct, legs, rep, label, order);
    std::vector<std::pair<std::string, LieElement>> gens;
    for (std::size_t i = 0; i < ct.stages().size(); ++i)
        for (const auto& [n, x] : ct.stages()[i].generators()) gens.emplace_back(n + " (stage " + std::to_string(i + 1) + ")", x);
    verify_universal_R(ct, legs, chain.total(legs.ring), gens, rep, label, order);
}

/// Images of the formal twist under the fundamental representation against
/// the matrix computation, in one truncated ring.
template <class FormalTwist, class MatrixTwist>
void backend_agreement(const FormalTwist& formal, const MatrixTwist& matrix, const StandardLegs<EnvelopingAlgebra>& fl,
                       const StandardLegs<MatrixAlgebra>& ml, VerificationReport& rep, const std::string& label, unsigned order)
{
    Representation rho(fl.alg, ml.alg);
    const auto f = rho(formal.value(fl.pair()), ml.ring);
    const auto m = matrix.value(ml.pair());
    rep.check(f == m, label + ": backends agree on F", "rho(F_formal) = F_matrix", "both", order, residual(f, m));
    const auto fi = rho(formal.inverse(fl.pair()), ml.ring);
    const auto mi = matrix.inverse(ml.pair());
    rep.check(fi == mi, label + ": backends agree on F^-1", "rho(F^-1_formal) = F^-1_matrix", "both", order, residual(fi, mi));
}

inline SuiteResult twist_suite(const RunConfig& cfg)
{
    const ChainSpec chain = configured_chain(cfg);
    SuiteResult out;
    out.result["algebra"] = cfg.algebra;
    out.result["working_algebra"] = chain.alg->name();
    const auto idx = selected_stages(chain, cfg);
    auto stages = nlohmann::ordered_json::array();
    for (auto i : idx) stages.push_back(stage_json(chain, i));
    out.result["stages"] = stages;
    const bool with_chain = !cfg.stage && chain.stages.size() > 1;
    out.result["chain_twist"] = with_chain;

    auto guarded = [&](const std::string& what, auto&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            out.report.check(false, what + ": construction", "the twist can be built", "-", 0, e.what());
        }
    };
    std::shared_ptr<MatrixAlgebra> mat = std::make_shared<MatrixAlgebra>(chain.alg);
    std::shared_ptr<EnvelopingAlgebra> env = std::make_shared<EnvelopingAlgebra>(chain.alg);
    if (uses_matrix(cfg.backend)) {
        const StandardLegs<MatrixAlgebra> legs{mat, backend_ring(chain, true, cfg.order)};
        for (auto i : idx) guarded(stage_label(chain, i) + " (matrix)", [&] { stage_twist_checks(chain, i, legs, out.report, 0); });
        if (with_chain) guarded(chain.alg->name() + " chain (matrix)", [&] { chain_twist_checks(chain, legs, out.report, 0); });
    }
    if (uses_formal(cfg.backend)) {
        const StandardLegs<EnvelopingAlgebra> legs{env, backend_ring(chain, false, cfg.order)};
        for (auto i : idx) guarded(stage_label(chain, i) + " (formal)", [&] { stage_twist_checks(chain, i, legs, out.report, cfg.order); });
        if (with_chain) guarded(chain.alg->name() + " chain (formal)", [&] { chain_twist_checks(chain, legs, out.report, cfg.order); });
    }
    if (cfg.backend == Backend::both) {
        const RingPtr ring = chain.ring(cfg.order);
        const StandardLegs<EnvelopingAlgebra> fl{env, ring};
        const StandardLegs<MatrixAlgebra> ml{mat, ring};
        for (auto i : idx)
            guarded(stage_label(chain, i) + " (both)", [&] {
                backend_agreement(StageTwist<EnvelopingAlgebra>(chain.alg, chain.stages[i].spec, ring),
                                  StageTwist<MatrixAlgebra>(chain.alg, chain.stages[i].spec, ring), fl, ml, out.report, stage_label(chain, i),
                                  cfg.order);
            });
        if (with_chain)
            guarded(chain.alg->name() + " chain (both)", [&] {
                backend_agreement(ChainTwist<EnvelopingAlgebra>(chain, ring), ChainTwist<MatrixAlgebra>(chain, ring), fl, ml, out.report,
                                  chain.alg->name() + " chain", cfg.order);
            });
    }
    return out;
}

// --- engine self tests -------------------------------------------------------

/// Random source with a fixed, platform-independent mapping to ranges.
class Sampler
{
public:
    explicit Sampler(std::uint64_t seed) : m_gen(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(m_gen() % n); }
    Rational rational() { return Rational(static_cast<long long>(below(7)) - 3, static_cast<long long>(below(3)) + 1); }

private:
    std::mt19937_64 m_gen;
};

/// A random element of U(g): a few random words with small rational coefficients.
inline TensorElement<EnvelopingAlgebra, 1> random_element(const std::shared_ptr<EnvelopingAlgebra>& env, const RingPtr& ring, Sampler& rnd,
                                                          std::size_t max_len = 3, std::size_t terms = 2)
{
    using T1 = TensorElement<EnvelopingAlgebra, 1>;
    const auto single = slot_embedding<EnvelopingAlgebra, 1>(env, ring, {0});
    const std::size_t d = env->lie().dim();
    T1 out = T1::zero(env, ring);
    for (std::size_t t = 0; t < terms; ++t) {
        T1 w = single.one;
        const std::size_t len = rnd.below(max_len + 1);
        for (std::size_t k = 0; k < len; ++k) w = w * single(LieElement::basis(static_cast<std::uint32_t>(rnd.below(d))));
        Rational c = rnd.rational();
        if (c.is_zero()) c = Rational(1);
        out += Scalar(ring, c) * w;
    }
    return out;
}

inline void lie_axioms(const SuperAlgebra& g, VerificationReport& rep)
{
    const std::size_t d = g.dim();
    const auto b = [&](std::size_t i) { return LieElement::basis(static_cast<std::uint32_t>(i)); };
    std::size_t bad_anti = 0, bad_jac = 0, bad_rep = 0;
    std::string first;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const LieElement lhs = g.bracket(b(i), b(j));
            const LieElement rhs = Rational(-koszul(g.parity(i), g.parity(j))) * g.bracket(b(j), b(i));
            if (!(lhs == rhs)) {
                ++bad_anti;
                if (first.empty()) first = "[" + g.basis(i).name + ", " + g.basis(j).name + "]";
            }
            const QMatrix xi = g.image(i), xj = g.image(j);
            const QMatrix m = koszul(g.parity(i), g.parity(j)) > 0 ? xi * xj - xj * xi : xi * xj + xj * xi;
            if (!(g.image(lhs) == m)) ++bad_rep;
            for (std::size_t k = 0; k < d; ++k) {
                const LieElement a = g.bracket(b(i), g.bracket(b(j), b(k)));
                const LieElement c = g.bracket(g.bracket(b(i), b(j)), b(k)) +
                                     Rational(koszul(g.parity(i), g.parity(j))) * g.bracket(b(j), g.bracket(b(i), b(k)));
                if (!(a == c)) ++bad_jac;
            }
        }
    const std::string n = g.name();
    rep.check(bad_anti == 0, n + ": super-antisymmetry on all basis pairs", "[x, y] = -(-1)^{p(x)p(y)} [y, x]", "-", 0,
              std::to_string(bad_anti) + " failures, first " + first);
    rep.check(bad_jac == 0, n + ": super-Jacobi on all basis triples", "[x, [y, z]] = [[x, y], z] + (-1)^{p(x)p(y)} [y, [x, z]]", "-", 0,
              std::to_string(bad_jac) + " failures");
    rep.check(bad_rep == 0, n + ": structure constants match the defining matrices", "rho([x, y]) = rho(x) rho(y) - (-1)^{p(x)p(y)} rho(y) rho(x)",
              "-", 0, std::to_string(bad_rep) + " failures");
}

/// Randomized properties of the two backends: associativity of the PBW
/// rewriting, the Hopf maps, and the representation as an algebra map.
inline void engine_properties(const SuperAlgebra& g, std::uint64_t seed, unsigned samples, VerificationReport& rep)
{
    using T1 = TensorElement<EnvelopingAlgebra, 1>;
    auto lie = std::make_shared<const SuperAlgebra>(g);
    auto env = std::make_shared<EnvelopingAlgebra>(lie);
    auto mat = std::make_shared<MatrixAlgebra>(lie);
    const RingPtr ring = Ring::make({}, 1);
    Representation rho(env, mat);
    Sampler rnd(seed);
    const std::string n = g.name();
    std::size_t bad_assoc = 0, bad_order = 0, bad_rep = 0, bad_delta = 0, bad_s = 0, bad_counit = 0;
    const auto single = slot_embedding<EnvelopingAlgebra, 1>(env, ring, {0});
    for (unsigned s = 0; s < samples; ++s) {
        const T1 a = random_element(env, ring, rnd), b = random_element(env, ring, rnd), c = random_element(env, ring, rnd);
        if (!((a * b) * c == a * (b * c))) ++bad_assoc;

        // one word of letters, reduced left to right and right to left
        std::vector<LieElement> letters(2 + rnd.below(4));
        for (auto& l : letters) l = LieElement::basis(static_cast<std::uint32_t>(rnd.below(g.dim())));
        T1 lr = single.one, rl = single.one;
        for (const auto& l : letters) lr = lr * single(l);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) rl = single(*it) * rl;
        if (!(lr == rl)) ++bad_order;

        if (!(rho(a * b, ring) == rho(a, ring) * rho(b, ring))) ++bad_rep;

        const T1 ab = a * b;
        const auto dab = coproduct_slot<1>(ab, 0);
        if (!(dab == coproduct_slot<1>(a, 0) * coproduct_slot<1>(b, 0))) ++bad_delta;
        // S(xy) = (-1)^{p(x)p(y)} S(y) S(x) on homogeneous parts
        for (Parity pa : {Parity::even, Parity::odd})
            for (Parity pb : {Parity::even, Parity::odd}) {
                const T1 x = a.parity_part(pa), y = b.parity_part(pb);
                if (!(antipode(x * y) == Rational(koszul(pa, pb)) * (antipode(y) * antipode(x)))) ++bad_s;
            }
        // m (S (x) id) Delta = eps
        const auto m = fold(coproduct_slot<1>(a, 0), FoldSide::left, [](const T1& x) { return antipode(x); });
        if (!(m == counit(a) * single.one)) ++bad_counit;
    }
    const std::string tail = " (" + std::to_string(samples) + " samples, seed " + std::to_string(seed) + ")";
    rep.check(bad_assoc == 0, n + ": PBW products are associative" + tail, "(ab)c = a(bc)", "formal", 0, std::to_string(bad_assoc) + " failures");
    rep.check(bad_order == 0, n + ": PBW rewriting is confluent" + tail, "x_1 (x_2 (... x_k)) = ((x_1 x_2) ...) x_k", "formal", 0,
              std::to_string(bad_order) + " failures");
    rep.check(bad_rep == 0, n + ": formal and matrix products agree" + tail, "rho(ab) = rho(a) rho(b)", "both", 0,
              std::to_string(bad_rep) + " failures");
    rep.check(bad_delta == 0, n + ": coproduct is an algebra map" + tail, "Delta(ab) = Delta(a) Delta(b)", "formal", 0,
              std::to_string(bad_delta) + " failures");
    rep.check(bad_s == 0, n + ": antipode is a graded anti-homomorphism" + tail, "S(ab) = (-1)^{p(a)p(b)} S(b) S(a)", "formal", 0,
              std::to_string(bad_s) + " failures");
    rep.check(bad_counit == 0, n + ": antipode axiom" + tail, "m (S (x) id) Delta(a) = eps(a) 1", "formal", 0,
              std::to_string(bad_counit) + " failures");
}

inline const std::vector<std::string>& default_algebras()
{
    static const std::vector<std::string> v{"gl(1|1)", "sl(2|1)", "sl(2|2)", "sl(3|1)", "osp(1|2)", "osp(1|4)", "osp(3|2)", "osp(2|2)"};
    return v;
}

inline SuiteResult selftest_suite(const RunConfig& cfg)
{
    SuiteResult out;
    std::vector<std::string> algs = cfg.algebra.empty() ? default_algebras() : std::vector<std::string>{cfg.algebra};
    out.result["algebras"] = algs;
    out.result["seed"] = cfg.seed;
    out.result["samples"] = cfg.samples;
    for (const auto& a : algs) {
        const SuperAlgebra g = parse_algebra(a);
        lie_axioms(g, out.report);
        engine_properties(g, cfg.seed, cfg.samples, out.report);
        if (g.family() == Family::sl) {
            const SuperAlgebra w = *working_algebra(g);
            lie_axioms(w, out.report);
            engine_properties(w, cfg.seed, cfg.samples, out.report);
        }
    }
    return out;
}

} // namespace supertwist

#endif
