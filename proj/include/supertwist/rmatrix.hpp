#ifndef SUPERTWIST_RMATRIX_HPP
#define SUPERTWIST_RMATRIX_HPP

// Jordanian and extended Jordanian r-matrices, their chains, the classical
// Yang-Baxter residual, cobrackets and co-commuting subalgebras.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "supertwist/hopf.hpp"
#include "supertwist/linalg.hpp"
#include "supertwist/scalar.hpp"
#include "supertwist/superalgebra.hpp"

namespace supertwist
{

/// Element of g (x) g with scalar coefficients: sum c * (left (x) right).
class LieTwoTensor
{
public:
    struct Term
    {
        Scalar coef;
        LieElement left, right;
    };

    LieTwoTensor() = default;
    explicit LieTwoTensor(std::vector<Term> t) : m_terms(std::move(t)) {}

    const std::vector<Term>& terms() const noexcept { return m_terms; }
    bool empty() const noexcept { return m_terms.empty(); }

    void add(Scalar c, LieElement a, LieElement b)
    {
        if (!c.is_zero() && !a.is_zero() && !b.is_zero()) m_terms.push_back({std::move(c), std::move(a), std::move(b)});
    }
    friend LieTwoTensor operator+(LieTwoTensor a, const LieTwoTensor& b)
    {
        a.m_terms.insert(a.m_terms.end(), b.m_terms.begin(), b.m_terms.end());
        return a;
    }
    friend LieTwoTensor operator*(const Scalar& c, LieTwoTensor a)
    {
        for (auto& t : a.m_terms) t.coef = c * t.coef;
        return a;
    }

    template <class Alg, std::size_t K>
    TensorElement<Alg, K> evaluate(const Legs<Alg, K>& legs) const
    {
        auto r = TensorElement<Alg, K>::zero(legs.one().algebra(), legs.one().ring());
        for (const auto& t : m_terms) r += t.coef * (legs.left(t.left) * legs.right(t.right));
        return r;
    }

    /// Rational part of the coefficient of each degree-one parameter monomial.
    std::map<std::uint64_t, std::vector<std::tuple<Rational, LieElement, LieElement>>> by_parameter() const
    {
        std::map<std::uint64_t, std::vector<std::tuple<Rational, LieElement, LieElement>>> out;
        for (const auto& t : m_terms)
            for (const auto& [k, q] : t.coef.terms()) {
                if (Ring::degree(k) != 1) throw std::invalid_argument("LieTwoTensor: coefficient is not linear in the parameters");
                out[k].emplace_back(q, t.left, t.right);
            }
        return out;
    }

private:
    std::vector<Term> m_terms;
};

/// a ^ b = a (x) b - (-1)^{p(a)p(b)} b (x) a.
inline LieTwoTensor graded_wedge(const SuperAlgebra& alg, const LieElement& a, const LieElement& b, const Scalar& c = Scalar(1))
{
    LieTwoTensor r;
    r.add(c, a, b);
    r.add(c.scaled(-koszul(alg.parity(a), alg.parity(b))), b, a);
    return r;
}

// Sign attached to the wedge of a pair. `literal` is (-1)^{p(plus) p(minus)};
// `invariant` is (-1)^{p(plus)}. They agree whenever e_theta is even. For odd
// e_theta only the second one makes the pair sum invariant under the
// centralizer of the line (the first already fails for sl(2|2)).
enum class PairSign { invariant, literal };

struct ExtensionPair
{
    Root gamma, partner;
    LieElement plus, minus;
    Rational t;
    Rational sign{1};
};

struct CarrierData
{
    Root theta;
    LieElement h_theta, e_theta;
    std::vector<ExtensionPair> pairs;
    std::optional<Root> half_root;
    std::optional<LieElement> half; // normalized so that e_theta = 2 [half, half]
    bool maximal = true;

    std::size_t order() const { return pairs.size() + (half ? 1 : 0); }
};

struct ExtraJordanian
{
    Root root;
    LieElement h, e;
    ParameterDecl parameter;
};

struct RMatrixSpec
{
    CarrierData carrier;
    ParameterDecl parameter;
    std::optional<ExtraJordanian> extra;
};

inline LieTwoTensor jordanian(const SuperAlgebra& alg, const LieElement& h, const LieElement& e, const Scalar& xi)
{
    if (!xi.is_homogeneous() || xi.parity() != alg.parity(e))
        throw std::invalid_argument("jordanian: parameter parity must equal the parity of e_theta");
    return graded_wedge(alg, h, e, xi);
}

inline LieTwoTensor extended_jordanian(const SuperAlgebra& alg, const CarrierData& c, const Scalar& xi)
{
    LieTwoTensor r = jordanian(alg, c.h_theta, c.e_theta, xi);
    for (const auto& p : c.pairs) {
        r = r + graded_wedge(alg, p.plus, p.minus, xi.scaled(p.sign));
    }
    if (c.half) r = r + graded_wedge(alg, *c.half, *c.half, xi.scaled(-1));
    return r;
}

inline Scalar parameter_scalar(const RingPtr& ring, const ParameterDecl& p) { return Scalar::parameter(ring, p.name); }

inline LieTwoTensor stage_rmatrix(const SuperAlgebra& alg, const RMatrixSpec& s, const RingPtr& ring)
{
    LieTwoTensor r = extended_jordanian(alg, s.carrier, parameter_scalar(ring, s.parameter));
    if (s.extra) r = r + jordanian(alg, s.extra->h, s.extra->e, parameter_scalar(ring, s.extra->parameter));
    return r;
}

/// The relations a carrier must satisfy; each failure is described in words.
inline std::vector<std::string> carrier_violations(const SuperAlgebra& alg, const CarrierData& c)
{
    std::vector<std::string> bad;
    auto br = [&](const LieElement& x, const LieElement& y) { return alg.bracket(x, y); };
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) bad.push_back(what);
    };
    const auto& h = c.h_theta;
    const auto& e = c.e_theta;
    expect(br(h, e) == e, "[h_theta, e_theta] = e_theta");
    std::vector<LieElement> all;
    for (const auto& p : c.pairs) {
        const std::string g = p.gamma.str();
        expect(br(h, p.plus) == (Rational(1) - p.t) * p.plus, "[h_theta, e_gamma] = (1 - t) e_gamma for " + g);
        expect(br(h, p.minus) == p.t * p.minus, "[h_theta, e_gamma'] = t e_gamma' for " + g);
        expect(br(p.plus, e).is_zero() && br(p.minus, e).is_zero(), "[e_gamma, e_theta] = 0 for " + g);
        expect(br(p.plus, p.minus) == e, "[e_gamma, e_gamma'] = e_theta for " + g);
        expect(alg.parity(e) == alg.parity(p.plus) + alg.parity(p.minus), "parity balance for " + g);
        all.push_back(p.plus);
        all.push_back(p.minus);
    }
    if (c.half) {
        const auto& a = *c.half;
        expect(br(h, a) == Rational(1, 2) * a, "[h_theta, e_theta/2] = 1/2 e_theta/2");
        expect(br(a, e).is_zero(), "[e_theta/2, e_theta] = 0");
        expect(Rational(2) * br(a, a) == e, "e_theta = 2 [e_theta/2, e_theta/2]");
        all.push_back(a);
    }
    // members of different pairs commute
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i / 2 == j / 2 && i < 2 * c.pairs.size() && j < 2 * c.pairs.size()) continue;
            if (i == j && i >= 2 * c.pairs.size()) continue;
            if (!br(all[i], all[j]).is_zero()) {
                bad.push_back("[" + alg.element_string(all[i]) + ", " + alg.element_string(all[j]) + "] != 0");
            }
        }
    return bad;
}

/// Carrier of the extended Jordanian r-matrix of maximal order for one line.
inline CarrierData detect_maximal_carrier(const SuperAlgebra& alg, const OrderingLine& line, PairSign rule = PairSign::invariant)
{
    if (line.roots.empty()) throw std::invalid_argument("detect_maximal_carrier: empty line");
    CarrierData c;
    c.theta = line.theta();
    const auto canon = [&](const Root& r) {
        auto i = alg.root_vector(r);
        if (!i) throw std::logic_error("detect_maximal_carrier: missing root vector for " + r.str());
        return LieElement::basis(*i);
    };
    auto h = alg.coroot_half(c.theta);
    if (!h) throw std::logic_error("detect_maximal_carrier: no Cartan element dual to " + c.theta.str());
    c.h_theta = *h;
    c.e_theta = canon(c.theta);

    // ratio c with x = c * y, for y != 0
    const auto ratio = [&](const LieElement& x, const LieElement& y) -> std::optional<Rational> {
        if (y.is_zero()) return std::nullopt;
        const auto& [i, yi] = y.terms().front();
        const Rational q = x.coeff(i) / yi;
        if (q.is_zero() || !(x == q * y)) return std::nullopt;
        return q;
    };

    for (const auto& g : line.roots)
        if (g + g == c.theta) {
            c.half_root = g;
            const LieElement a = canon(g);
            c.half = a;
            c.e_theta = Rational(2) * alg.bracket(a, a);
            if (c.e_theta.is_zero()) throw std::logic_error("detect_maximal_carrier: [e_theta/2, e_theta/2] vanishes");
        }

    std::set<Root> used{c.theta};
    if (c.half_root) used.insert(*c.half_root);
    for (const auto& g : line.roots) {
        if (used.count(g)) continue;
        const Root partner = c.theta - g;
        if (std::find(line.roots.begin(), line.roots.end(), partner) == line.roots.end())
            throw std::logic_error("detect_maximal_carrier: root " + g.str() + " has no partner in its line");
        used.insert(g);
        used.insert(partner);
        ExtensionPair p;
        p.gamma = g;
        p.partner = partner;
        p.plus = canon(g);
        const LieElement y = canon(partner);
        auto q = ratio(alg.bracket(p.plus, y), c.e_theta);
        if (!q) throw std::logic_error("detect_maximal_carrier: cannot normalize the pair " + g.str() + ", " + partner.str());
        p.minus = q->inverse() * y;
        auto t = ratio(alg.bracket(c.h_theta, p.minus), p.minus);
        p.t = t ? *t : Rational(0);
        p.sign = rule == PairSign::literal ? koszul(alg.parity(p.plus), alg.parity(p.minus))
                                           : koszul(alg.parity(p.plus), Parity::odd);
        c.pairs.push_back(std::move(p));
    }

    for (const auto& g : alg.positive_roots()) {
        const Root partner = c.theta - g;
        if (alg.is_root(partner) && SuperAlgebra::is_positive(partner) && !used.count(g)) c.maximal = false;
    }
    return c;
}

/// [r12, r13 + r23] + [r13, r23].
template <class Alg>
TensorElement<Alg, 3> cybe_residual(const LieTwoTensor& r, const StandardLegs<Alg>& legs)
{
    const auto r12 = r.evaluate(legs.legs12());
    const auto r13 = r.evaluate(legs.legs13());
    const auto r23 = r.evaluate(legs.legs23());
    return supercommutator(r12, r13 + r23) + supercommutator(r13, r23);
}

/// [x (x) 1 + 1 (x) x, r].
template <class Alg>
TensorElement<Alg, 2> cobracket(const LieElement& x, const LieTwoTensor& r, const StandardLegs<Alg>& legs)
{
    return supercommutator(legs.delta()(x), r.evaluate(legs.pair()));
}

struct KernelResult
{
    std::vector<LieElement> basis;
    std::vector<std::uint32_t> basis_elements; // basis indices whose element lies in the kernel
    bool closed = true;
    std::vector<std::string> problems;

    bool contains(const SuperAlgebra& alg, const LieElement& x) const
    {
        if (x.is_zero()) return true;
        if (basis.empty()) return false;
        std::vector<std::vector<Rational>> fam;
        for (const auto& b : basis) fam.push_back(b.dense(alg.dim()));
        return CoordinateSolver(fam, alg.dim()).solve(x.dense(alg.dim())).has_value();
    }
};

/// Largest subspace of span(domain) co-commuting with r, by exact linear
/// algebra on g (x) g after splitting r by parameter.
inline KernelResult kernel_subalgebra(const SuperAlgebra& alg, const LieTwoTensor& r, const std::vector<std::uint32_t>& domain)
{
    const std::size_t d = alg.dim();
    const auto parts = r.by_parameter();
    std::map<std::size_t, std::vector<Rational>> rows; // (parameter block, tensor index) -> row
    std::size_t block = 0;
    for (const auto& [key, terms] : parts) {
        (void)key;
        for (std::size_t col = 0; col < domain.size(); ++col) {
            const LieElement x = LieElement::basis(domain[col]);
            const Parity px = alg.parity(domain[col]);
            auto add = [&](const LieElement& a, const LieElement& b, const Rational& q) {
                for (const auto& [i, ai] : a.terms())
                    for (const auto& [j, bj] : b.terms()) {
                        auto& row = rows[block * d * d + i * d + j];
                        if (row.empty()) row.assign(domain.size(), Rational(0));
                        row[col] += q * ai * bj;
                    }
            };
            for (const auto& [q, a, b] : terms) {
                add(alg.bracket(x, a), b, q);
                add(a, alg.bracket(x, b), q * koszul(px, alg.parity(a)));
            }
        }
        ++block;
    }
    std::vector<std::vector<Rational>> m;
    for (auto& [k, row] : rows) {
        (void)k;
        bool nz = false;
        for (const auto& v : row) nz = nz || !v.is_zero();
        if (nz) m.push_back(std::move(row));
    }
    KernelResult out;
    for (const auto& v : nullspace(std::move(m), domain.size())) {
        LieElement x;
        for (std::size_t c = 0; c < domain.size(); ++c)
            if (!v[c].is_zero()) x += v[c] * LieElement::basis(domain[c]);
        out.basis.push_back(std::move(x));
    }
    for (auto i : domain)
        if (out.contains(alg, LieElement::basis(i))) out.basis_elements.push_back(i);
    for (const auto& a : out.basis)
        for (const auto& b : out.basis) {
            const LieElement c = alg.bracket(a, b);
            if (!out.contains(alg, c)) {
                out.closed = false;
                out.problems.push_back("[" + alg.element_string(a) + ", " + alg.element_string(b) + "] leaves the kernel");
            }
        }
    return out;
}

inline std::vector<std::uint32_t> all_indices(const SuperAlgebra& alg)
{
    std::vector<std::uint32_t> v(alg.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint32_t>(i);
    return v;
}

/// A standard subalgebra gl(p|q) or osp(M|2n) spanned by basis elements.
struct StandardSubalgebra
{
    std::string name;
    std::vector<std::size_t> eps_indices;
    std::vector<std::uint32_t> generators;
};

namespace detail
{

inline bool cartan_for_eps(const SuperAlgebra& alg, std::size_t k, std::uint32_t& out)
{
    auto i = alg.index_of("h" + std::to_string(k + 1));
    if (!i) return false;
    out = *i;
    return true;
}

inline std::vector<std::uint32_t> standard_generators(const SuperAlgebra& alg, const std::vector<std::size_t>& idx)
{
    std::vector<std::uint32_t> gens;
    std::set<std::size_t> in(idx.begin(), idx.end());
    for (auto k : idx) {
        std::uint32_t h;
        if (cartan_for_eps(alg, k, h)) gens.push_back(h);
    }
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        const auto& r = alg.basis(i).root;
        if (!r) continue;
        bool inside = true, any = false;
        for (std::size_t k = 0; k < r->coeffs.size(); ++k)
            if (r->coeffs[k] != 0) {
                any = true;
                inside = inside && in.count(k);
            }
        if (any && inside) gens.push_back(static_cast<std::uint32_t>(i));
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

inline std::string standard_name(const SuperAlgebra& alg, const std::vector<std::size_t>& idx)
{
    int even = 0, odd = 0;
    for (auto k : idx) (is_odd(alg.eps_parity(k)) ? odd : even)++;
    if (alg.family() == Family::gl || alg.family() == Family::sl) {
        if (idx.empty()) return "0";
        return "gl(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
    }
    bool short_roots = false;
    for (std::size_t k = 0; k < alg.eps_count(); ++k) short_roots = short_roots || alg.is_root(alg.eps(k));
    const int m = 2 * even + (short_roots ? 1 : 0);
    if (odd == 0 && m <= 1) return "0";
    return "osp(" + std::to_string(m) + "|" + std::to_string(2 * odd) + ")";
}

} // namespace detail

/// Largest set of epsilon indices whose standard subalgebra lies in the kernel.
inline StandardSubalgebra identify_standard_subalgebra(const SuperAlgebra& alg, const KernelResult& ker)
{
    const std::size_t n = alg.eps_count();
    std::set<std::uint32_t> have(ker.basis_elements.begin(), ker.basis_elements.end());
    StandardSubalgebra best{detail::standard_name(alg, {}), {}, {}};
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) idx.push_back(k);
        if (idx.size() < best.eps_indices.size()) continue;
        const auto gens = detail::standard_generators(alg, idx);
        bool ok = true;
        for (auto g : gens) ok = ok && have.count(g);
        if (!ok) continue;
        if (idx.size() > best.eps_indices.size() || (idx.size() == best.eps_indices.size() && idx < best.eps_indices))
            best = {detail::standard_name(alg, idx), idx, gens};
    }
    return best;
}

/// The algebra a chain is built in: sl(m|n) chains live in gl(m|n), because
/// the Cartan elements h_theta are not supertraceless.
inline std::shared_ptr<const SuperAlgebra> working_algebra(const SuperAlgebra& alg)
{
    if (alg.family() == Family::sl)
        return std::make_shared<const SuperAlgebra>(build_algebra(Family::gl, alg.shape_a(), alg.shape_b()));
    return std::make_shared<const SuperAlgebra>(alg);
}

struct ChainStage
{
    RMatrixSpec spec;
    bool carrier_in_previous_kernel = true;
    std::vector<std::string> carrier_problems;
    KernelResult kernel_borel; // of r_1 + ... + r_i in b+
    KernelResult kernel_full;  // of r_1 + ... + r_i in g
    StandardSubalgebra reduced;
};

struct ChainSpec
{
    std::shared_ptr<const SuperAlgebra> alg;
    std::vector<ChainStage> stages;

    std::vector<ParameterDecl> parameters() const
    {
        std::vector<ParameterDecl> p;
        for (const auto& s : stages) {
            p.push_back(s.spec.parameter);
            if (s.spec.extra) p.push_back(s.spec.extra->parameter);
        }
        return p;
    }
    RingPtr ring(unsigned order, bool exact = false) const { return Ring::make(parameters(), order, exact); }

    LieTwoTensor partial_sum(std::size_t upto, const RingPtr& ring) const
    {
        LieTwoTensor r;
        for (std::size_t i = 0; i < upto && i < stages.size(); ++i) r = r + stage_rmatrix(*alg, stages[i].spec, ring);
        return r;
    }
    LieTwoTensor total(const RingPtr& ring) const { return partial_sum(stages.size(), ring); }

    /// Names of the algebras carrying each stage: g, then the reduced kernels.
    std::vector<std::string> reduction_chain() const
    {
        std::vector<std::string> out{alg->name()};
        for (std::size_t i = 0; i + 1 < stages.size(); ++i) out.push_back(stages[i].reduced.name);
        return out;
    }
};

struct ChainOptions
{
    OddSquareMode odd_mode = OddSquareMode::grassmann;
    std::size_t max_stages = 64;
    PairSign pair_sign = PairSign::invariant;
};

inline ParameterDecl stage_parameter(std::size_t stage, Parity p, OddSquareMode mode, bool prime = false)
{
    std::string name = (is_odd(p) ? "eta" : "xi") + std::to_string(stage);
    if (prime) name += "p";
    return {name, p, mode};
}

/// Chain of extended Jordanian r-matrices of maximal order, one per ordering line.
inline ChainSpec build_chain(const SuperAlgebra& input, const ChainOptions& opt = {})
{
    ChainSpec chain;
    chain.alg = working_algebra(input);
    const SuperAlgebra& alg = *chain.alg;
    const auto& lines = alg.ordering().lines;
    const auto domain = all_indices(alg);
    const auto borel = alg.borel();
    std::optional<KernelResult> previous;
    for (std::size_t i = 0; i < lines.size() && i < opt.max_stages; ++i) {
        ChainStage st;
        st.spec.carrier = detect_maximal_carrier(alg, lines[i], opt.pair_sign);
        st.spec.parameter = stage_parameter(i + 1, alg.parity(st.spec.carrier.e_theta), opt.odd_mode);
        if (lines[i].extra) {
            const Root& x = *lines[i].extra;
            std::vector<Rational> lambda(alg.eps_count());
            for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] = Rational(x.coeffs[k], 2);
            auto h = alg.eps_dual(lambda);
            auto e = alg.root_vector(x);
            if (!h || !e) throw std::logic_error("build_chain: cannot realize the extra Jordanian term");
            st.spec.extra = ExtraJordanian{x, *h, LieElement::basis(*e), stage_parameter(i + 1, x.parity, opt.odd_mode, true)};
        }
        st.carrier_problems = carrier_violations(alg, st.spec.carrier);
        if (previous) {
            std::vector<LieElement> elems{st.spec.carrier.h_theta, st.spec.carrier.e_theta};
            for (const auto& p : st.spec.carrier.pairs) {
                elems.push_back(p.plus);
                elems.push_back(p.minus);
            }
            if (st.spec.carrier.half) elems.push_back(*st.spec.carrier.half);
            if (st.spec.extra) {
                elems.push_back(st.spec.extra->h);
                elems.push_back(st.spec.extra->e);
            }
            for (const auto& x : elems)
                if (!previous->contains(alg, x)) {
                    st.carrier_in_previous_kernel = false;
                    st.carrier_problems.push_back(alg.element_string(x) + " is outside the previous kernel");
                }
        }
        chain.stages.push_back(std::move(st));
        const auto ring = chain.ring(1);
        const auto r = chain.partial_sum(chain.stages.size(), ring);
        auto& cur = chain.stages.back();
        cur.kernel_borel = kernel_subalgebra(alg, r, borel);
        cur.kernel_full = kernel_subalgebra(alg, r, domain);
        cur.reduced = identify_standard_subalgebra(alg, cur.kernel_full);
        previous = cur.kernel_full;
    }
    return chain;
}

inline nlohmann::ordered_json chain_to_json(const ChainSpec& c)
{
    nlohmann::ordered_json j;
    j["algebra"] = c.alg->name();
    auto stages = nlohmann::ordered_json::array();
    auto kernels = nlohmann::ordered_json::array();
    for (const auto& s : c.stages) {
        nlohmann::ordered_json st;
        st["theta"] = s.spec.carrier.theta.str();
        st["N"] = s.spec.carrier.order();
        auto pairs = nlohmann::ordered_json::array();
        for (const auto& p : s.spec.carrier.pairs) pairs.push_back({{"gamma", p.gamma.str()}, {"partner", p.partner.str()}, {"t", p.t.str()}});
        if (s.spec.carrier.half) pairs.push_back({{"gamma", s.spec.carrier.half_root->str()}, {"partner", s.spec.carrier.half_root->str()}, {"t", "1/2"}});
        st["pairs"] = pairs;
        auto params = nlohmann::ordered_json::array();
        params.push_back({{"name", s.spec.parameter.name}, {"parity", to_string(s.spec.parameter.parity)}});
        if (s.spec.extra) {
            params.push_back({{"name", s.spec.extra->parameter.name}, {"parity", to_string(s.spec.extra->parameter.parity)}});
            st["extra_jordanian"] = s.spec.extra->root.str();
        }
        st["parameters"] = params;
        stages.push_back(std::move(st));
        kernels.push_back(s.kernel_full.basis_elements);
    }
    j["stages"] = stages;
    j["kernel_chain"] = kernels;
    return j;
}

/// The r-matrices written out in the two small examples.
struct ExampleRMatrix
{
    std::string label;
    std::string formula;
    std::shared_ptr<const SuperAlgebra> alg;
    std::vector<ParameterDecl> params;
    std::function<LieTwoTensor(const RingPtr&)> build;
};

inline std::vector<ExampleRMatrix> example_rmatrices(OddSquareMode mode = OddSquareMode::grassmann)
{
    std::vector<ExampleRMatrix> out;
    auto gl11 = std::make_shared<const SuperAlgebra>(build_algebra(Family::gl, 1, 1));
    auto osp12 = std::make_shared<const SuperAlgebra>(build_algebra(Family::osp, 1, 2));
    const ParameterDecl hbar{"hbar", Parity::even, mode}, xi{"xi", Parity::even, mode}, eta{"eta", Parity::odd, mode};
    {
        const auto& g = *gl11;
        const LieElement e12 = LieElement::basis(g.at("e{1-2}")), e21 = LieElement::basis(g.at("f{1-2}"));
        const LieElement h = LieElement::basis(g.at("h1")) - LieElement::basis(g.at("h2"));
        out.push_back({"gl(1|1) DJ", "hbar (e{1-2} (x) e{2-1} + e{2-1} (x) e{1-2})", gl11, {hbar}, [=](const RingPtr& ring) {
                           LieTwoTensor r;
                           const Scalar c = Scalar::parameter(ring, "hbar");
                           r.add(c, e12, e21);
                           r.add(c, e21, e12);
                           return r;
                       }});
        out.push_back({"gl(1|1) r1(eta)", "eta (h1 - h2) ^ e{1-2}", gl11, {eta}, [=](const RingPtr& ring) {
                           return graded_wedge(*gl11, h, e12, Scalar::parameter(ring, "eta"));
                       }});
    }
    {
        const auto x = osp12_elements(*osp12);
        out.push_back({"osp(1|2) DJ", "hbar (e+ ^ e- + 2 v+ (x) v- + 2 v- (x) v+)", osp12, {hbar}, [=](const RingPtr& ring) {
                           const Scalar c = Scalar::parameter(ring, "hbar");
                           LieTwoTensor r = graded_wedge(*osp12, x.e_plus, x.e_minus, c);
                           r.add(c.scaled(2), x.v_plus, x.v_minus);
                           r.add(c.scaled(2), x.v_minus, x.v_plus);
                           return r;
                       }});
        out.push_back({"osp(1|2) r1(xi)", "xi h ^ e+", osp12, {xi}, [=](const RingPtr& ring) {
                           return graded_wedge(*osp12, x.h, x.e_plus, Scalar::parameter(ring, "xi"));
                       }});
        out.push_back({"osp(1|2) r2(xi)", "xi (h ^ e+ - 2 v+ (x) v+)", osp12, {xi}, [=](const RingPtr& ring) {
                           const Scalar c = Scalar::parameter(ring, "xi");
                           LieTwoTensor r = graded_wedge(*osp12, x.h, x.e_plus, c);
                           r.add(c.scaled(-2), x.v_plus, x.v_plus);
                           return r;
                       }});
        out.push_back({"osp(1|2) r3(eta)", "eta h ^ v+", osp12, {eta}, [=](const RingPtr& ring) {
                           return graded_wedge(*osp12, x.h, x.v_plus, Scalar::parameter(ring, "eta"));
                       }});
        out.push_back({"osp(1|2) r4(eta)", "eta v+ ^ e+", osp12, {eta}, [=](const RingPtr& ring) {
                           return graded_wedge(*osp12, x.v_plus, x.e_plus, Scalar::parameter(ring, "eta"));
                       }});
    }
    return out;
}

} // namespace supertwist

#endif
