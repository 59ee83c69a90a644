#ifndef SUPERTWIST_TWIST_HPP
#define SUPERTWIST_TWIST_HPP

// Twists of U(g) built from extended Jordanian carriers, and their checks.
//
// Every object here is a formula in Lie algebra elements, evaluated against
// slot embeddings (see hopf.hpp). The same code therefore produces F, F^21,
// F^12, (Delta (x) id)F and (epsilon (x) id)F, in either backend.

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "supertwist/hopf.hpp"
#include "supertwist/report.hpp"
#include "supertwist/rmatrix.hpp"
#include "supertwist/series.hpp"

namespace supertwist
{

enum class ExtensionForm { product, single };

// Sign in front of e_gamma e_gamma' inside the exponential closed forms.
// `paired` reuses the sign of the pair; `repeated` is (-1)^{deg e_gamma deg e_gamma}.
enum class SignReading { paired, repeated };

inline std::string to_string(SignReading r) { return r == SignReading::paired ? "paired" : "repeated"; }

template <class Alg>
class StageTwist
{
public:
    template <std::size_t K>
    using T = TensorElement<Alg, K>;
    template <std::size_t K>
    using E = Embedding<Alg, K>;
    template <std::size_t K>
    using L = Legs<Alg, K>;

    StageTwist(std::shared_ptr<const SuperAlgebra> g, RMatrixSpec spec, RingPtr ring)
        : m_g(std::move(g)), m_spec(std::move(spec)), m_ring(std::move(ring)), m_xi(parameter_scalar(m_ring, m_spec.parameter))
    {
        if (m_spec.extra)
            throw std::invalid_argument("twist: no twist is known for the extra Jordanian term on " + m_spec.extra->root.str());
        if (m_spec.carrier.half) m_half = Rational(2) * *m_spec.carrier.half;
    }

    const SuperAlgebra& lie() const { return *m_g; }
    const RMatrixSpec& spec() const noexcept { return m_spec; }
    const CarrierData& carrier() const noexcept { return m_spec.carrier; }
    const Scalar& xi() const noexcept { return m_xi; }
    const RingPtr& ring() const noexcept { return m_ring; }
    bool has_half() const noexcept { return m_half.has_value(); }
    /// e_{theta/2} normalized so that its square is e_theta.
    const LieElement& half_vector() const { return *m_half; }

    // --- one-slot formulas -------------------------------------------------

    template <std::size_t K>
    T<K> sigma(const E<K>& e) const
    {
        return Rational(1, 2) * series_log1p(m_xi * e(carrier().e_theta));
    }
    /// exp(q sigma).
    template <std::size_t K>
    T<K> exp_sigma(const E<K>& e, const Rational& q) const
    {
        if (q.is_zero()) return e.one;
        return series_exp(q * sigma(e));
    }

    /// sum_n scalar(n) xi^n s^n coef(n) e_gamma^n e_gamma'^n, one factor per pair.
    template <std::size_t K>
    T<K> pair_series(const E<K>& e, const std::function<Rational(unsigned)>& scalar,
                     const std::function<T<K>(unsigned)>& coef, bool alternate_xi) const
    {
        T<K> prod = e.one;
        for (const auto& p : carrier().pairs) {
            const T<K> a = e(p.plus), b = e(p.minus);
            T<K> sum = e.one;
            T<K> an = e.one, bn = e.one;
            Scalar xin(Rational(1));
            for (unsigned n = 1;; ++n) {
                if (n > series_iteration_cap) throw std::runtime_error("pair_series: non-terminating expansion");
                an = an * a;
                bn = bn * b;
                xin = xin * m_xi.scaled(alternate_xi ? -p.sign : p.sign);
                if (xin.is_zero()) break;
                const T<K> ab = an * bn;
                if (ab.is_zero()) break;
                sum += xin.scaled(scalar(n)) * (coef(n) * ab);
            }
            prod = prod * sum;
        }
        return prod;
    }

    /// sum_i s_i e_gamma_i e_gamma_-i, with the sign chosen by `reading`.
    template <std::size_t K>
    T<K> pair_products(const E<K>& e, SignReading reading) const
    {
        T<K> s = T<K>::zero(e.one.algebra(), e.one.ring());
        for (const auto& p : carrier().pairs) {
            const Rational sg = reading == SignReading::paired ? p.sign : Rational(koszul(m_g->parity(p.plus), Parity::odd));
            s += sg * (e(p.plus) * e(p.minus));
        }
        return s;
    }

    /// Folding of F_S: exp(sigma/2) or 1; `power` scales the exponent.
    template <std::size_t K>
    T<K> u_super(const E<K>& e, const Rational& power) const
    {
        return has_half() ? exp_sigma(e, Rational(1, 2) * power) : e.one;
    }

    /// u(F_N) by the product formula, or its inverse; `alternate` selects (-xi)^n over xi^n there.
    template <std::size_t K>
    T<K> u_product(const E<K>& e, bool inverse, bool alternate = true) const
    {
        if (!inverse)
            return pair_series<K>(e, [](unsigned n) { return factorial(n).inverse(); }, [&](unsigned) { return e.one; }, true) *
                   u_super(e, 1);
        return pair_series<K>(e, [](unsigned n) { return factorial(n).inverse(); },
                              [&](unsigned n) { return exp_sigma(e, Rational(-2 * static_cast<int>(n))); }, alternate) *
               u_super(e, -1);
    }

    /// sqrt of u(F_N) by the product formula, or of its inverse.
    template <std::size_t K>
    T<K> w_product(const E<K>& e, bool inverse) const
    {
        const T<K> d = series_inv(exp_sigma(e, 1) + e.one);
        if (!inverse)
            return pair_series<K>(e, [](unsigned n) { return factorial(n).inverse(); }, [&](unsigned n) { return pow(d, n); }, true) *
                   u_super(e, Rational(1, 2));
        return pair_series<K>(e, [](unsigned n) { return factorial(n).inverse(); },
                              [&](unsigned n) { return exp_sigma(e, Rational(-static_cast<int>(n))) * pow(d, n); }, false) *
               u_super(e, Rational(-1, 2));
    }

    /// exp(c xi (2 sigma)/(e^{2 sigma} - 1) sum s e e') times the matching power of u_S.
    template <std::size_t K>
    T<K> exponential_form(const E<K>& e, const Rational& c, const Rational& u_power, SignReading reading) const
    {
        const T<K> bern = series_bernoulli(Rational(2) * sigma(e));
        return series_exp(m_xi.scaled(c) * (bern * pair_products(e, reading))) * u_super(e, u_power);
    }

    // --- two-slot formulas -------------------------------------------------

    template <std::size_t K>
    T<K> jordanian(const L<K>& l, bool inverse = false) const
    {
        return series_exp(Rational(inverse ? -2 : 2) * (l.left(carrier().h_theta) * sigma(l.right)));
    }

    template <std::size_t K>
    std::vector<T<K>> extension_exponents(const L<K>& l) const
    {
        std::vector<T<K>> out;
        for (const auto& p : carrier().pairs)
            out.push_back(m_xi.scaled(p.sign) * (l.left(p.plus) * (l.right(p.minus) * exp_sigma(l.right, -2 * p.t))));
        return out;
    }

    template <std::size_t K>
    T<K> super_factor(const L<K>& l, bool inverse = false) const
    {
        if (!has_half()) return l.one();
        const auto frac = [&](const E<K>& e) { return e(*m_half) * series_inv(exp_sigma(e, 1) + e.one); };
        const T<K> a = l.one() - m_xi * (frac(l.left) * frac(l.right));
        const T<K> el = exp_sigma(l.left, 1), er = exp_sigma(l.right, 1);
        const T<K> ratio = (el + l.one()) * (er + l.one()) * series_inv(Rational(2) * (el * er + l.one()));
        const T<K> root = series_sqrt(ratio);
        if (!inverse) return a * root;
        return series_inv(root) * series_inv(a);
    }

    template <std::size_t K>
    T<K> extension(const L<K>& l, ExtensionForm form = ExtensionForm::product) const
    {
        const auto xs = extension_exponents(l);
        T<K> f = l.one();
        if (form == ExtensionForm::product) {
            for (const auto& x : xs) f = f * series_exp(x);
        } else {
            T<K> sum = T<K>::zero(l.one().algebra(), l.one().ring());
            for (const auto& x : xs) sum += x;
            f = series_exp(sum);
        }
        return f * super_factor(l);
    }

    template <std::size_t K>
    T<K> extension_inverse(const L<K>& l) const
    {
        T<K> f = super_factor(l, true);
        const auto xs = extension_exponents(l);
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) f = f * series_exp(-*it);
        return f;
    }

    template <std::size_t K>
    T<K> value(const L<K>& l) const
    {
        return extension(l) * jordanian(l);
    }
    template <std::size_t K>
    T<K> inverse(const L<K>& l) const
    {
        return jordanian(l, true) * extension_inverse(l);
    }

    /// h_theta, e_theta, e_{theta/2}, and both members of every pair.
    std::vector<std::pair<std::string, LieElement>> generators() const
    {
        std::vector<std::pair<std::string, LieElement>> g{{"h_theta", carrier().h_theta}, {"e_theta", carrier().e_theta}};
        if (has_half()) g.emplace_back("e_theta/2", *m_half);
        for (const auto& p : carrier().pairs) {
            g.emplace_back("e_" + p.gamma.str(), p.plus);
            g.emplace_back("e_" + p.partner.str(), p.minus);
        }
        return g;
    }

private:
    std::shared_ptr<const SuperAlgebra> m_g;
    RMatrixSpec m_spec;
    RingPtr m_ring;
    Scalar m_xi;
    std::optional<LieElement> m_half;
};

/// F = F_k' ... F_1' F_0 with F_i' = W_i F_i W_i^{-1}, W_i = (w_{i-1} (x) w_{i-1}) ... (w_0 (x) w_0).
template <class Alg>
class ChainTwist
{
public:
    template <std::size_t K>
    using T = TensorElement<Alg, K>;

    ChainTwist(const ChainSpec& chain, const RingPtr& ring)
    {
        for (const auto& s : chain.stages) m_stages.emplace_back(chain.alg, s.spec, ring);
    }
    explicit ChainTwist(std::vector<StageTwist<Alg>> stages) : m_stages(std::move(stages)) {}

    const std::vector<StageTwist<Alg>>& stages() const noexcept { return m_stages; }

    template <std::size_t K>
    T<K> value(const Legs<Alg, K>& l) const
    {
        T<K> f = l.one();
        for (std::size_t i = 0; i < m_stages.size(); ++i) f = conjugated(i, l, m_stages[i].value(l)) * f;
        return f;
    }
    template <std::size_t K>
    T<K> inverse(const Legs<Alg, K>& l) const
    {
        T<K> f = l.one();
        for (std::size_t i = 0; i < m_stages.size(); ++i) f = f * conjugated(i, l, m_stages[i].inverse(l));
        return f;
    }

private:
    template <std::size_t K>
    T<K> conjugated(std::size_t i, const Legs<Alg, K>& l, T<K> x) const
    {
        for (std::size_t j = i; j-- > 0;) {
            const auto& s = m_stages[j];
            const T<K> w = s.w_product(l.left, false) * s.w_product(l.right, false);
            const T<K> wi = s.w_product(l.left, true) * s.w_product(l.right, true);
            x = w * x * wi;
        }
        return x;
    }

    std::vector<StageTwist<Alg>> m_stages;
};

// --- verification ------------------------------------------------------------

template <class Alg, std::size_t K>
std::string residual(const TensorElement<Alg, K>& a, const TensorElement<Alg, K>& b)
{
    return clip((a - b).str());
}

template <class Alg>
std::string backend_name()
{
    if constexpr (std::is_same_v<Alg, EnvelopingAlgebra>) return "formal";
    else return "matrix";
}

/// Invertibility, cocycle and counit conditions.
template <class Alg, class Twist>
void verify_twist_axioms(const Twist& tw, const StandardLegs<Alg>& legs, VerificationReport& rep, const std::string& label,
                         unsigned order)
{
    const std::string be = backend_name<Alg>();
    const auto pair = legs.pair();
    const auto f = tw.value(pair);
    const auto fi = tw.inverse(pair);
    const auto one2 = pair.one();
    rep.check(f * fi == one2 && fi * f == one2, label + ": F F^-1 = 1", "F F^-1 = F^-1 F = 1 (x) 1", be, order,
              residual(f * fi, one2));
    rep.check(f.degree_part(0) == one2, label + ": F = 1 at zero parameters", "F|_{params=0} = 1 (x) 1", be, order,
              residual(f.degree_part(0), one2));

    const auto lhs = tw.value(legs.legs12()) * tw.value(legs.delta_id());
    const auto rhs = tw.value(legs.legs23()) * tw.value(legs.id_delta());
    rep.check(lhs == rhs, label + ": cocycle", "F^12 (Delta (x) id)(F) = F^23 (id (x) Delta)(F)", be, order, residual(lhs, rhs));

    const auto one1 = legs.single().one;
    const auto el = tw.value(legs.eps_id());
    const auto er = tw.value(legs.id_eps());
    rep.check(el == one1, label + ": counit (eps (x) id)", "(eps (x) id)(F) = 1", be, order, residual(el, one1));
    rep.check(er == one1, label + ": counit (id (x) eps)", "(id (x) eps)(F) = 1", be, order, residual(er, one1));
}

/// The product and single-exponential presentations of F_N.
template <class Alg>
void verify_extension_forms(const StageTwist<Alg>& st, const StandardLegs<Alg>& legs, VerificationReport& rep,
                            const std::string& label, unsigned order)
{
    const auto pair = legs.pair();
    const auto a = st.extension(pair, ExtensionForm::product);
    const auto b = st.extension(pair, ExtensionForm::single);
    rep.check(a == b, label + ": F_N as a product and as one exponential", "prod_i exp(X_i) F_S = exp(sum_i X_i) F_S", backend_name<Alg>(),
              order, residual(a, b));
}

/// For odd e_theta and a Grassmann parameter the logarithm stops after one term.
template <class Alg>
void verify_sigma_branch(const StageTwist<Alg>& st, const StandardLegs<Alg>& legs, VerificationReport& rep, const std::string& label,
                         unsigned order)
{
    if (!is_odd(st.lie().parity(st.carrier().e_theta))) return;
    const auto one = legs.single();
    const auto s = st.sigma(one);
    const auto lin = st.xi().scaled(Rational(1, 2)) * one(st.carrier().e_theta);
    if (st.spec().parameter.odd_square_mode == OddSquareMode::grassmann)
        rep.check(s == lin, label + ": sigma for odd e_theta", "sigma = 1/2 xi e_theta", backend_name<Alg>(), order, residual(s, lin));
    else
        rep.note(label + ": sigma for odd e_theta", std::string("sigma ") + (s == lin ? "equals" : "differs from") + " 1/2 xi e_theta",
                 backend_name<Alg>(), order);
}

/// Delta_xi(x) = F Delta(x) F^-1.
template <class Alg, class Twist>
TensorElement<Alg, 2> twisted_coproduct(const Twist& tw, const StandardLegs<Alg>& legs, const TensorElement<Alg, 2>& dx)
{
    const auto pair = legs.pair();
    return tw.value(pair) * dx * tw.inverse(pair);
}

/// u = sum f1 S(f2) of the full twist and its inverse sum S(g1) g2 for F^-1 = sum g1 (x) g2.
struct AntipodeData
{
    TensorElement<EnvelopingAlgebra, 1> u, u_inv;

    TensorElement<EnvelopingAlgebra, 1> operator()(const TensorElement<EnvelopingAlgebra, 1>& x) const
    {
        return u * antipode(x) * u_inv;
    }
};

template <class Twist>
AntipodeData twisted_antipode(const Twist& tw, const StandardLegs<EnvelopingAlgebra>& legs)
{
    const auto pair = legs.pair();
    const auto s = [](const TensorElement<EnvelopingAlgebra, 1>& x) { return antipode(x); };
    return {fold(tw.value(pair), FoldSide::right, s), fold(tw.inverse(pair), FoldSide::left, s)};
}

/// Delta_xi is a homomorphism on the given generators; in the formal backend
/// also coassociativity and the antipode axiom, through the slotwise Hopf maps.
template <class Alg, class Twist>
void verify_twisted_hopf(const Twist& tw, const StandardLegs<Alg>& legs, const std::vector<std::pair<std::string, LieElement>>& gens,
                         VerificationReport& rep, const std::string& label, unsigned order)
{
    const std::string be = backend_name<Alg>();
    const auto pair = legs.pair();
    const auto delta = legs.delta();
    const auto F = tw.value(pair);
    const auto Fi = tw.inverse(pair);
    const SuperAlgebra& g = legs.alg->lie();
    std::vector<TensorElement<Alg, 2>> dx;
    for (const auto& [name, x] : gens) dx.push_back(F * delta(x) * Fi);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            const auto lhs = F * delta(g.bracket(gens[i].second, gens[j].second)) * Fi;
            const auto rhs = supercommutator(dx[i], dx[j]);
            rep.check(lhs == rhs, label + ": Delta_xi[" + gens[i].first + ", " + gens[j].first + "]",
                      "Delta_xi([x, y]) = [Delta_xi(x), Delta_xi(y)]", be, order, residual(lhs, rhs));
        }

    if constexpr (std::is_same_v<Alg, EnvelopingAlgebra>) {
        const auto slot = coproduct_slot<2>(F, 0);
        const auto emb = tw.value(legs.delta_id());
        rep.check(slot == emb, label + ": (Delta (x) id)F by the coproduct map", "slotwise Delta of F = F on (Delta (x) id) legs", be, order,
                  residual(slot, emb));

        const auto f12 = tw.value(legs.legs12()), f12i = tw.inverse(legs.legs12());
        const auto f23 = tw.value(legs.legs23()), f23i = tw.inverse(legs.legs23());
        const AntipodeData S = twisted_antipode(tw, legs);
        const auto zero = TensorElement<EnvelopingAlgebra, 1>::zero(legs.alg, legs.ring);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto a = f12 * coproduct_slot<2>(dx[i], 0) * f12i;
            const auto b = f23 * coproduct_slot<2>(dx[i], 1) * f23i;
            rep.check(a == b, label + ": coassociativity on " + gens[i].first, "(Delta_xi (x) id) Delta_xi = (id (x) Delta_xi) Delta_xi", be,
                      order, residual(a, b));
            const auto l = fold(dx[i], FoldSide::left, S);
            const auto r = fold(dx[i], FoldSide::right, S);
            rep.check(l.is_zero() && r.is_zero(), label + ": antipode axiom on " + gens[i].first,
                      "m (S_xi (x) id) Delta_xi(x) = m (id (x) S_xi) Delta_xi(x) = eps(x) 1", be, order, residual(l, zero) + " | " + residual(r, zero));
        }
    }
}

/// The Delta_xi and S_xi closed forms for a single stage. Terms that involve
/// e_{theta/2} are dropped when theta/2 is not a root.
template <class Alg>
void verify_closed_forms(const StageTwist<Alg>& st, const StandardLegs<Alg>& legs, VerificationReport& rep,
                         const std::string& label, unsigned order)
{
    const std::string be = backend_name<Alg>();
    const auto& c = st.carrier();
    const auto pair = legs.pair();
    const auto one = legs.single();
    const auto delta = legs.delta();
    const auto F = st.value(pair);
    const auto Fi = st.inverse(pair);
    const auto conj = [&](const TensorElement<Alg, 2>& dx) { return F * dx * Fi; };
    const auto& lft = pair.left;
    const auto& rgt = pair.right;
    const bool odd_theta = is_odd(st.lie().parity(c.e_theta));

    for (int sgn : {1, -1}) {
        const auto lhs = conj(st.exp_sigma(delta, sgn));
        const auto rhs = st.exp_sigma(lft, sgn) * st.exp_sigma(rgt, sgn);
        rep.check(lhs == rhs, label + ": Delta_xi(exp(" + std::string(sgn > 0 ? "+" : "-") + "sigma))",
                  "exp(sigma) (x) exp(sigma), both signs", be, order, residual(lhs, rhs));
    }
    if (st.has_half()) {
        const auto& a = st.half_vector();
        const auto lhs = conj(delta(a));
        const auto rhs = lft(a) + st.exp_sigma(lft, 1) * rgt(a);
        rep.check(lhs == rhs, label + ": Delta_xi(e_theta/2)", "e_theta/2 (x) 1 + exp(sigma) (x) e_theta/2", be, order,
                  residual(lhs, rhs));
    }
    {
        const auto lhs = conj(delta(c.h_theta));
        auto rhs = lft(c.h_theta) * st.exp_sigma(rgt, -2) + rgt(c.h_theta);
        if (st.has_half()) {
            const auto& a = st.half_vector();
            rhs += st.xi().scaled(Rational(1, 4)) * (lft(a) * st.exp_sigma(lft, -1) * (rgt(a) * st.exp_sigma(rgt, -2)));
        }
        for (const auto& p : c.pairs)
            rhs -= st.xi().scaled(p.sign) * (lft(p.plus) * (rgt(p.minus) * st.exp_sigma(rgt, -2 * (p.t + 1))));
        rep.check(lhs == rhs, label + ": Delta_xi(h_theta)",
                  std::string("h (x) exp(-2 sigma) + 1 (x) h") + (st.has_half() ? " + xi/4 e_theta/2 exp(-sigma) (x) e_theta/2 exp(-2 sigma)" : "") +
                      " - xi sum s e_gamma (x) e_gamma' exp(-2(t+1) sigma)",
                  be, order, residual(lhs, rhs));
    }
    for (const auto& p : c.pairs) {
        const auto lp = conj(delta(p.plus));
        const auto rp = lft(p.plus) * st.exp_sigma(rgt, -2 * p.t) + rgt(p.plus);
        rep.check(lp == rp, label + ": Delta_xi(e_" + p.gamma.str() + ")", "e_gamma (x) exp(-2 t sigma) + 1 (x) e_gamma", be, order,
                  residual(lp, rp));
        const auto lm = conj(delta(p.minus));
        const auto rm = lft(p.minus) * st.exp_sigma(rgt, 2 * p.t) + st.exp_sigma(lft, 2) * rgt(p.minus);
        rep.check(lm == rm, label + ": Delta_xi(e_" + p.partner.str() + ")",
                  "e_gamma' (x) exp(2 t sigma) + exp(2 sigma) (x) e_gamma'", be, order, residual(lm, rm));
        if (odd_theta) {
            const auto rm2 = lft(p.minus) * st.exp_sigma(rgt, 2 * p.t) + st.exp_sigma(lft, -2) * rgt(p.minus);
            rep.check(lm == rm2, label + ": Delta_xi(e_" + p.partner.str() + "), odd e_theta form",
                      "e_gamma' (x) exp(2 t sigma) + exp(-2 sigma) (x) e_gamma'", be, order, residual(lm, rm2));
        }
    }

    if constexpr (std::is_same_v<Alg, EnvelopingAlgebra>) {
        const AntipodeData S = twisted_antipode(st, legs);
        for (int sgn : {1, -1}) {
            const auto lhs = S(st.exp_sigma(one, sgn));
            const auto rhs = st.exp_sigma(one, -sgn);
            rep.check(lhs == rhs, label + ": S_xi(exp(" + std::string(sgn > 0 ? "+" : "-") + "sigma))", "exp(-/+ sigma)", be, order,
                      residual(lhs, rhs));
        }
        if (st.has_half()) {
            const auto& a = st.half_vector();
            const auto lhs = S(one(a));
            const auto rhs = -(one(a) * st.exp_sigma(one, -1));
            rep.check(lhs == rhs, label + ": S_xi(e_theta/2)", "-e_theta/2 exp(-sigma)", be, order, residual(lhs, rhs));
        }
        {
            const auto lhs = S(one(c.h_theta));
            auto rhs = -(one(c.h_theta) * st.exp_sigma(one, 2));
            if (st.has_half()) rhs += Rational(1, 4) * (st.exp_sigma(one, 2) - one.one);
            for (const auto& p : c.pairs) rhs -= st.xi().scaled(p.sign) * (one(p.plus) * one(p.minus));
            rep.check(lhs == rhs, label + ": S_xi(h_theta)",
                      std::string("-h exp(2 sigma)") + (st.has_half() ? " + (exp(2 sigma) - 1)/4" : "") + " - xi sum s e_gamma e_gamma'", be,
                      order, residual(lhs, rhs));
            if (!st.has_half()) {
                // the dropped term is really absent
                const auto kept = rhs + Rational(1, 4) * (st.exp_sigma(one, 2) - one.one);
                rep.check(lhs != kept, label + ": S_xi(h_theta) needs the e_theta/2 term removed",
                          "keeping (exp(2 sigma) - 1)/4 gives a mismatch", be, order, "the unremoved formula also matches");
            }
        }
        for (const auto& p : c.pairs) {
            const auto lp = S(one(p.plus));
            const auto rp = -(one(p.plus) * st.exp_sigma(one, 2 * p.t));
            rep.check(lp == rp, label + ": S_xi(e_" + p.gamma.str() + ")", "-e_gamma exp(2 t sigma)", be, order, residual(lp, rp));
            const auto lm = S(one(p.minus));
            const auto rm = -(one(p.minus) * st.exp_sigma(one, -2 * (p.t + 1)));
            rep.check(lm == rm, label + ": S_xi(e_" + p.partner.str() + ")", "-e_gamma' exp(-2(t+1) sigma)", be, order,
                      residual(lm, rm));
            if (odd_theta) {
                const auto rm2 = -(one(p.minus) * st.exp_sigma(one, -2 * (p.t - 1)));
                rep.check(lm == rm2, label + ": S_xi(e_" + p.partner.str() + "), odd e_theta form", "-e_gamma' exp(-2(t-1) sigma)", be,
                          order, residual(lm, rm2));
            }
        }
    }
}

/// R = F^21 F^-1: triangularity, first order against -r, and R Delta_xi R^-1 = Delta_xi^op.
template <class Alg, class Twist>
void verify_universal_R(const Twist& tw, const StandardLegs<Alg>& legs, const LieTwoTensor& r,
                        const std::vector<std::pair<std::string, LieElement>>& generators, VerificationReport& rep,
                        const std::string& label, unsigned order)
{
    const std::string be = backend_name<Alg>();
    const auto pair = legs.pair();
    const auto flip = legs.flipped();
    const auto R = tw.value(flip) * tw.inverse(pair);
    const auto R21 = super_flip(R);
    const auto one = pair.one();
    rep.check(R21 == tw.value(pair) * tw.inverse(flip), label + ": R^21 by flipping equals F F^21^-1", "flip(F^21 F^-1) = F (F^21)^-1", be,
              order, residual(R21, tw.value(pair) * tw.inverse(flip)));
    rep.check(R21 * R == one, label + ": triangularity", "R^21 R = 1 (x) 1", be, order, residual(R21 * R, one));
    const auto first = (R - one).degree_part(1);
    const auto target = -r.evaluate(pair).degree_part(1);
    rep.check(first == target, label + ": first order of R is -r", "R = 1 - r + O(params^2)", be, order, residual(first, target));

    const auto delta = legs.delta();
    const auto F = tw.value(pair);
    const auto Fi = tw.inverse(pair);
    for (const auto& [name, x] : generators) {
        const auto dx = F * delta(x) * Fi;
        const auto lhs = super_flip(dx);
        const auto rhs = R * dx * R21;
        rep.check(lhs == rhs, label + ": opposite coproduct of " + name, "Delta_xi^op(x) = R Delta_xi(x) R^-1", be, order,
                  residual(lhs, rhs));
    }
}

struct FoldingElements
{
    TensorElement<EnvelopingAlgebra, 1> u, u_inv, sqrt_u, sqrt_u_inv;
};

/// u(F_N) and its relatives, each obtained from the defining fold and from
/// every closed form; closed forms with a sign reading report that reading.
inline FoldingElements folding_suite(const StageTwist<EnvelopingAlgebra>& st, const StandardLegs<EnvelopingAlgebra>& legs,
                                     VerificationReport& rep, const std::string& label, unsigned order)
{
    using T1 = TensorElement<EnvelopingAlgebra, 1>;
    const std::string be = "formal";
    const auto pair = legs.pair();
    const auto one = legs.single();
    const auto fn = st.extension(pair);
    const auto fn_inv = st.extension_inverse(pair);

    const AntipodeData s_xi = twisted_antipode(st, legs);
    const auto fj = st.jordanian(pair);
    const auto fj_inv = st.jordanian(pair, true);
    const auto sfun = [](const T1& x) { return antipode(x); };
    const AntipodeData s_j{fold(fj, FoldSide::right, sfun), fold(fj_inv, FoldSide::left, sfun)};

    FoldingElements out;
    out.u = fold(fn, FoldSide::left, s_xi);
    const T1 u_right = fold(fn, FoldSide::right, s_j);
    rep.check(out.u == u_right, label + ": left and right foldings agree", "((S_xi (x) Id) F_N) o 1 = ((Id (x) S_J) F_N) o 1", be, order,
              residual(out.u, u_right));
    const T1 u_prod = st.u_product(one, false);
    rep.check(out.u == u_prod, label + ": u by the product formula", "u = prod_i sum_n (-xi)^n/n! s^n e^n e'^n u_S", be, order,
              residual(out.u, u_prod));

    out.u_inv = fold(fn_inv, FoldSide::right, s_xi);
    const T1 ui_left = fold(fn_inv, FoldSide::left, s_j);
    rep.check(out.u_inv == ui_left, label + ": foldings of F_N^-1 agree", "((Id (x) S_xi) F_N^-1) o 1 = ((S_J (x) Id) F_N^-1) o 1", be,
              order, residual(out.u_inv, ui_left));
    const T1 ui_prod = st.u_product(one, true);
    rep.check(out.u_inv == ui_prod, label + ": u^-1 by the product formula",
              "u^-1 = prod_i sum_n (-xi)^n exp(-2n sigma)/n! s^n e^n e'^n u_S^-1", be, order, residual(out.u_inv, ui_prod));
    const T1 ui_prod2 = st.u_product(one, true, false);
    rep.check(out.u_inv == ui_prod2, label + ": u^-1 by the product formula with xi^n",
              "u^-1 = prod_i sum_n xi^n exp(-2n sigma)/n! s^n e^n e'^n u_S^-1", be, order, residual(out.u_inv, ui_prod2));
    rep.check(out.u * out.u_inv == one.one, label + ": u u^-1 = 1", "u u^-1 = 1", be, order, residual(out.u * out.u_inv, one.one));

    out.sqrt_u = series_sqrt(out.u);
    out.sqrt_u_inv = series_sqrt(out.u_inv);
    const T1 w = st.w_product(one, false);
    const T1 wi = st.w_product(one, true);
    rep.check(out.sqrt_u == w, label + ": sqrt(u) by the product formula", "sqrt(u) = prod_i sum_n (-xi)^n s^n/(n! (e^sigma + 1)^n) e^n e'^n sqrt(u_S)", be,
              order, residual(out.sqrt_u, w));
    rep.check(w * w == out.u, label + ": sqrt(u)^2 = u", "w_xi^2 = u", be, order, residual(w * w, out.u));
    rep.check(out.sqrt_u_inv == wi, label + ": sqrt(u^-1) by the product formula",
              "sqrt(u^-1) = prod_i sum_n xi^n exp(-n sigma) s^n/(n! (e^sigma + 1)^n) e^n e'^n sqrt(u_S^-1)", be, order,
              residual(out.sqrt_u_inv, wi));
    rep.check(w * wi == one.one, label + ": sqrt(u) sqrt(u^-1) = 1", "w_xi w_xi^-1 = 1", be, order, residual(w * wi, one.one));

    struct Exp
    {
        const char* what;
        const T1* ref;
        Rational c, u_power;
    };
    const Exp forms[] = {{"u", &out.u, Rational(-1), Rational(1)},
                         {"u^-1", &out.u_inv, Rational(1), Rational(-1)},
                         {"sqrt(u)", &out.sqrt_u, Rational(-1, 2), Rational(1, 2)},
                         {"sqrt(u^-1)", &out.sqrt_u_inv, Rational(1, 2), Rational(-1, 2)}};
    for (const auto& f : forms) {
        std::vector<SignReading> matched;
        std::string res;
        for (SignReading rd : {SignReading::paired, SignReading::repeated}) {
            const T1 e = st.exponential_form(one, f.c, f.u_power, rd);
            if (e == *f.ref) matched.push_back(rd);
            else if (res.empty()) res = to_string(rd) + ": " + residual(e, *f.ref);
        }
        std::string which;
        for (auto rd : matched) which += (which.empty() ? "" : ", ") + to_string(rd);
        rep.check(!matched.empty(), label + ": " + f.what + " by the exponential formula" + (which.empty() ? "" : " [" + which + "]"),
                  std::string(f.what) + " = exp(c xi sigma/(exp(2 sigma) - 1) sum s e e') u_S^p", be, order, res);
    }

    if (st.has_half()) {
        const auto fs = st.super_factor(pair);
        const T1 us = fold(fs, FoldSide::left, s_xi);
        const T1 expected = st.u_super(one, 1);
        rep.check(us == expected, label + ": folding of F_S", "u_S = exp(sigma/2)", be, order, residual(us, expected));
    }
    return out;
}

/// w (x) w conjugation trivializes the twisted coproduct on the kernel of the stage r-matrix.
/// Elements in `informational` are co-commuting but outside the named subalgebra;
/// their outcome is recorded without being a pass/fail condition.
template <class Alg>
void verify_w_trivialization(const StageTwist<Alg>& st, const StandardLegs<Alg>& legs, const std::vector<LieElement>& kernel,
                             VerificationReport& rep, const std::string& label, unsigned order,
                             const std::vector<LieElement>& informational = {})
{
    const std::string be = backend_name<Alg>();
    const auto one = legs.single();
    const auto pair = legs.pair();
    const auto delta = legs.delta();
    const auto w = st.w_product(one, false);
    const auto wi = st.w_product(one, true);
    rep.check(w.degree_part(0) == one.one, label + ": w = 1 mod xi", "w_xi = 1 mod xi", be, order, residual(w.degree_part(0), one.one));
    const auto ew = st.w_product(legs.id_eps().right, false);
    rep.check(ew == one.one, label + ": eps(w) = 1", "eps(w_xi) = 1", be, order, residual(ew, one.one));
    rep.check(w * wi == one.one, label + ": w w^-1 = 1", "w_xi w_xi^-1 = 1", be, order, residual(w * wi, one.one));

    const auto F = st.value(pair);
    const auto Fi = st.inverse(pair);
    const auto dw = st.w_product(delta, false);
    const auto dwi = st.w_product(delta, true);
    const auto ww_inv = st.w_product(pair.left, true) * st.w_product(pair.right, true);
    const auto g = ww_inv * F * dw;
    const auto run = [&](const LieElement& x, bool info) {
        const std::string name = st.lie().element_string(x);
        const auto dx = delta(x);
        const auto c = supercommutator(dx, g);
        const auto lhs = F * (dw * dx * dwi) * Fi;
        const auto y = [&](const Embedding<Alg, 2>& e) { return st.w_product(e, false) * e(x) * st.w_product(e, true); };
        const auto rhs = y(pair.left) + y(pair.right);
        if (info) {
            rep.note(label + ": co-commuting " + name + " outside the named subalgebra",
                     std::string(lhs == rhs ? "is" : "is not") + " trivialized by w", be, order);
            return;
        }
        rep.check(c.is_zero(), label + ": w condition for " + name, "[Delta(x), (w^-1 (x) w^-1) Delta_xi(w) F] = 0", be, order, clip(c.str()));
        rep.check(lhs == rhs, label + ": trivialized coproduct of " + name, "Delta_xi(w x w^-1) = w x w^-1 (x) 1 + 1 (x) w x w^-1", be,
                  order, residual(lhs, rhs));
    };
    for (const auto& x : kernel) run(x, false);
    for (const auto& x : informational) run(x, true);
}

} // namespace supertwist

#endif
