#include <memory>
#include <random>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "supertwist/enveloping.hpp"
#include "supertwist/hopf.hpp"
#include "supertwist/matrix_algebra.hpp"
#include "supertwist/suite.hpp"

using namespace supertwist;

namespace
{

RingPtr odd_ring(unsigned order = 4)
{
    return Ring::make({{"xi", Parity::even}, {"eta", Parity::odd}, {"zeta", Parity::odd}}, order);
}

Scalar random_coef(const RingPtr& ring, std::mt19937_64& gen)
{
    static const char* names[] = {"xi", "eta", "zeta"};
    Scalar c(ring, Rational(static_cast<std::int64_t>(gen() % 5) - 2));
    for (const char* n : names)
        if (gen() % 2) c += Scalar::parameter(ring, n, Rational(static_cast<std::int64_t>(gen() % 5) - 2, 1 + static_cast<std::int64_t>(gen() % 2)));
    if (gen() % 3 == 0) c += Scalar::parameter(ring, "eta") * Scalar::parameter(ring, "zeta");
    return c;
}

template <std::size_t K>
TensorElement<MatrixAlgebra, K> random_matrix_tensor(const std::shared_ptr<MatrixAlgebra>& alg, const RingPtr& ring, std::mt19937_64& gen)
{
    using T = TensorElement<MatrixAlgebra, K>;
    std::vector<typename T::Term> terms;
    const std::size_t d = alg->dim();
    const std::size_t n = 1 + gen() % 4;
    for (std::size_t t = 0; t < n; ++t) {
        typename T::Word w{};
        for (auto& k : w) k = alg->unit_key(gen() % d, gen() % d);
        terms.push_back({w, random_coef(ring, gen)});
    }
    return T::from_terms(alg, ring, std::move(terms));
}

template <std::size_t K>
void check_against_oracle(const std::string& name, unsigned samples, std::uint64_t seed)
{
    auto g = std::make_shared<const SuperAlgebra>(parse_algebra(name));
    auto alg = std::make_shared<MatrixAlgebra>(g);
    const auto ring = odd_ring();
    std::mt19937_64 gen(seed);
    for (unsigned s = 0; s < samples; ++s) {
        const auto a = random_matrix_tensor<K>(alg, ring, gen);
        const auto b = random_matrix_tensor<K>(alg, ring, gen);
        const auto lhs = oracle::from_tensor<K>(*g, a * b, ring);
        const auto rhs = oracle::from_tensor<K>(*g, a, ring) * oracle::from_tensor<K>(*g, b, ring);
        REQUIRE(lhs == rhs);
    }
}

} // namespace

TEST_CASE("slot embeddings carry the Koszul sign")
{
    auto g = std::make_shared<const SuperAlgebra>(parse_algebra("gl(1|1)"));
    const StandardLegs<EnvelopingAlgebra> legs{std::make_shared<EnvelopingAlgebra>(g), odd_ring()};
    const auto pair = legs.pair();
    const auto e = LieElement::basis(g->at("e{1-2}")), f = LieElement::basis(g->at("f{1-2}")), h = LieElement::basis(g->at("h1"));
    // (1 (x) f)(e (x) 1) = -(e (x) f) for odd e, f
    CHECK(pair.right(f) * pair.left(e) == -(pair.left(e) * pair.right(f)));
    CHECK(pair.right(h) * pair.left(e) == pair.left(e) * pair.right(h));
    CHECK(super_flip(pair.left(e) * pair.right(f)) == -(pair.left(f) * pair.right(e)));
    CHECK(super_flip(pair.left(e) * pair.right(h)) == pair.left(h) * pair.right(e));
}

TEST_CASE("odd scalars anticommute with odd tensor factors")
{
    auto g = std::make_shared<const SuperAlgebra>(parse_algebra("gl(1|1)"));
    const auto ring = odd_ring();
    const StandardLegs<EnvelopingAlgebra> legs{std::make_shared<EnvelopingAlgebra>(g), ring};
    const auto one = legs.single();
    const auto e = LieElement::basis(g->at("e{1-2}")), h = LieElement::basis(g->at("h1"));
    const Scalar eta = Scalar::parameter(ring, "eta");
    CHECK(one(e) * (eta * one(h)) == -(eta * (one(e) * one(h))));
    CHECK(one(h) * (eta * one(e)) == eta * (one(h) * one(e)));
    // eta e is even, so (eta e)^2 = -eta^2 e^2 = 0 in the grassmann ring
    CHECK(((eta * one(e)) * (eta * one(e))).is_zero());
}

TEST_CASE("odd squares reduce to half brackets")
{
    auto g = std::make_shared<const SuperAlgebra>(parse_algebra("osp(1|2)"));
    const auto x = osp12_elements(*g);
    const RingPtr ring = Ring::make({}, 1);
    const StandardLegs<EnvelopingAlgebra> legs{std::make_shared<EnvelopingAlgebra>(g), ring};
    const auto one = legs.single();
    CHECK(one(x.v_plus) * one(x.v_plus) == Rational(1, 4) * one(x.e_plus));
    CHECK(one(x.v_minus) * one(x.v_minus) == Rational(-1, 4) * one(x.e_minus));
    const StandardLegs<MatrixAlgebra> ml{std::make_shared<MatrixAlgebra>(g), ring};
    CHECK(ml.single()(x.v_plus) * ml.single()(x.v_plus) == Rational(1, 4) * ml.single()(x.e_plus));
}

TEST_CASE("matrix tensor products agree with the dense operator oracle", "[property]")
{
    check_against_oracle<1>("gl(1|1)", 100, 11);
    check_against_oracle<2>("gl(1|1)", 150, 12);
    check_against_oracle<2>("osp(1|2)", 150, 13);
    check_against_oracle<3>("gl(1|1)", 100, 14);
    check_against_oracle<3>("osp(1|2)", 100, 15);
}

TEST_CASE("the flip is an algebra automorphism of the tensor square", "[property]")
{
    auto g = std::make_shared<const SuperAlgebra>(parse_algebra("gl(2|1)"));
    auto alg = std::make_shared<MatrixAlgebra>(g);
    const auto ring = odd_ring();
    std::mt19937_64 gen(99);
    for (int s = 0; s < 100; ++s) {
        const auto a = random_matrix_tensor<2>(alg, ring, gen), b = random_matrix_tensor<2>(alg, ring, gen);
        REQUIRE(super_flip(a * b) == super_flip(a) * super_flip(b));
        REQUIRE(super_flip(super_flip(a)) == a);
    }
}

TEST_CASE("the representation is an algebra map with odd scalars", "[property]")
{
    auto g = std::make_shared<const SuperAlgebra>(parse_algebra("osp(1|2)"));
    auto env = std::make_shared<EnvelopingAlgebra>(g);
    auto mat = std::make_shared<MatrixAlgebra>(g);
    const auto ring = odd_ring();
    Representation rho(env, mat);
    Sampler rnd(5);
    std::mt19937_64 gen(6);
    for (int s = 0; s < 100; ++s) {
        const auto a = random_coef(ring, gen) * random_element(env, ring, rnd);
        const auto b = random_coef(ring, gen) * random_element(env, ring, rnd);
        REQUIRE(rho(a * b, ring) == rho(a, ring) * rho(b, ring));
    }
}

TEST_CASE("Hopf structure of the enveloping algebra", "[property]")
{
    for (const char* name : {"gl(1|1)", "osp(1|2)", "gl(2|1)"}) {
        VerificationReport rep;
        engine_properties(parse_algebra(name), 2024, 100, rep);
        INFO(rep.to_text());
        CHECK(rep.passed());
    }
}

TEST_CASE("coproduct and counit on generators")
{
    auto g = std::make_shared<const SuperAlgebra>(parse_algebra("gl(1|1)"));
    const RingPtr ring = Ring::make({}, 1);
    const StandardLegs<EnvelopingAlgebra> legs{std::make_shared<EnvelopingAlgebra>(g), ring};
    const auto x = LieElement::basis(g->at("e{1-2}"));
    const auto ex = legs.single()(x);
    CHECK(coproduct_slot<1>(ex, 0) == legs.delta()(x));
    CHECK(counit(ex).is_zero());
    CHECK(antipode(ex) == -ex);
    CHECK(antipode(ex * ex).is_zero());
}
