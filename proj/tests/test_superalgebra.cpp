#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "supertwist/rmatrix.hpp"
#include "supertwist/suite.hpp"
#include "supertwist/superalgebra.hpp"

using namespace supertwist;

namespace
{

LieElement b(const SuperAlgebra& g, const std::string& name) { return LieElement::basis(g.at(name)); }

std::vector<std::string> line_strings(const SuperAlgebra& g)
{
    std::vector<std::string> out;
    for (const auto& line : g.ordering().lines) {
        std::string s;
        for (std::size_t k = 0; k < line.roots.size(); ++k) {
            const std::string r = line.roots[k].str();
            s += (s.empty() ? "" : " ") + (k == line.maximal ? "[" + r + "]" : r);
        }
        out.push_back(s);
    }
    return out;
}

std::size_t count_parity(const SuperAlgebra& g, Parity p)
{
    std::size_t n = 0;
    for (const auto& r : g.positive_roots()) n += r.parity == p;
    return n;
}

} // namespace

TEST_CASE("dimensions of the built algebras")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 2; ++n) {
            CHECK(parse_algebra("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")").dim() == static_cast<std::size_t>((m + n) * (m + n)));
            CHECK(parse_algebra("sl(" + std::to_string(m) + "|" + std::to_string(n) + ")").dim() ==
                  static_cast<std::size_t>((m + n) * (m + n) - 1));
        }
    // even part so(M) + sp(2n), odd part M * 2n
    CHECK(parse_algebra("osp(1|2)").dim() == 5);
    CHECK(parse_algebra("osp(1|4)").dim() == 14);
    CHECK(parse_algebra("osp(3|2)").dim() == 12);
    CHECK(parse_algebra("osp(2|2)").dim() == 8);
    CHECK(parse_algebra("osp(4|2)").dim() == 17);
}

TEST_CASE("positive roots and their parities")
{
    const auto g = parse_algebra("gl(2|2)");
    CHECK(g.positive_roots().size() == 6);
    CHECK(count_parity(g, Parity::odd) == 4);

    const auto o = parse_algebra("osp(1|4)");
    CHECK(o.positive_roots().size() == 6);
    CHECK(count_parity(o, Parity::odd) == 2);

    const auto o32 = parse_algebra("osp(3|2)");
    // eps1, 2eps2, eps1 +- eps2, eps2
    CHECK(o32.positive_roots().size() == 5);
    CHECK(count_parity(o32, Parity::odd) == 3);
}

TEST_CASE("basis matrices are homogeneous and span a closed algebra")
{
    for (const auto& name : default_algebras()) {
        const auto g = parse_algebra(name);
        VerificationReport rep;
        lie_axioms(g, rep);
        INFO(rep.to_text());
        CHECK(rep.passed());
    }
    const auto w = parse_algebra("gl(3|1)");
    VerificationReport rep;
    lie_axioms(w, rep);
    CHECK(rep.passed());
}

TEST_CASE("gl(1|1) relations")
{
    const auto g = parse_algebra("gl(1|1)");
    const auto e12 = b(g, "e{1-2}"), e21 = b(g, "f{1-2}"), h1 = b(g, "h1"), h2 = b(g, "h2");
    CHECK(g.parity(e12) == Parity::odd);
    CHECK(g.bracket(e12, e21) == h1 + h2);
    CHECK(g.bracket(e12, e12).is_zero());
    CHECK(g.bracket(h1 - h2, e12) == Rational(2) * e12);
    CHECK(g.bracket(h1 + h2, e12).is_zero());
}

TEST_CASE("osp(1|2) Cartan-Weyl relations")
{
    const auto g = parse_algebra("osp(1|2)");
    const auto x = osp12_elements(g);
    CHECK(g.bracket(x.h, x.v_plus) == Rational(1, 2) * x.v_plus);
    CHECK(g.bracket(x.h, x.v_minus) == Rational(-1, 2) * x.v_minus);
    CHECK(g.bracket(x.v_plus, x.v_minus) == Rational(-1, 2) * x.h);
    CHECK(g.bracket(x.h, x.e_plus) == x.e_plus);
    CHECK(g.bracket(x.h, x.e_minus) == -x.e_minus);
    CHECK(g.bracket(x.e_plus, x.e_minus) == Rational(2) * x.h);
    // v+^2 = 1/2 [v+, v+] in U, so e+ = 2 [v+, v+] = 4 v+^2
    CHECK(g.bracket(x.v_plus, x.v_plus) == Rational(1, 2) * x.e_plus);
    CHECK(g.bracket(x.v_minus, x.v_minus) == Rational(-1, 2) * x.e_minus);
}

TEST_CASE("normal orderings")
{
    CHECK(line_strings(parse_algebra("gl(2|1)")) == std::vector<std::string>{"eps1-eps2 [eps1-eps3] eps2-eps3"});
    CHECK(line_strings(parse_algebra("gl(2|2)")) ==
          std::vector<std::string>{"eps1-eps2 eps1-eps3 [eps1-eps4] eps3-eps4 eps2-eps4", "[eps2-eps3]"});
    CHECK(line_strings(parse_algebra("osp(1|4)")) == std::vector<std::string>{"eps1-eps2 eps1 [2eps1] eps1+eps2", "eps2 [2eps2]"});
    CHECK(line_strings(parse_algebra("osp(1|2)")) == std::vector<std::string>{"eps1 [2eps1]"});
    CHECK(line_strings(parse_algebra("osp(2|2)")) == std::vector<std::string>{"eps1-eps2 [eps1+eps2] 2eps2"});
}

TEST_CASE("every positive root appears exactly once in the ordering")
{
    for (const auto& name : default_algebras()) {
        const auto g = *working_algebra(parse_algebra(name));
        const auto roots = g.positive_roots();
        std::size_t positive = 0;
        for (const auto& e : g.basis()) positive += e.root && SuperAlgebra::is_positive(*e.root);
        INFO(name);
        CHECK(roots.size() == positive);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(g.is_root(roots[i]));
            for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(roots[i] == roots[j]);
        }
    }
}

TEST_CASE("coroot of the maximal root")
{
    const auto g = parse_algebra("gl(2|2)");
    const Root theta = g.ordering().lines[0].theta();
    const auto h = g.coroot_half(theta);
    REQUIRE(h);
    const auto e = LieElement::basis(*g.root_vector(theta));
    CHECK(g.bracket(*h, e) == e);
}

TEST_CASE("malformed algebra names are rejected")
{
    CHECK_THROWS_AS(parse_algebra("foo(1|1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("gl(1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("osp(1|3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_algebra("sl(1|0)"), std::invalid_argument);
    CHECK_NOTHROW(parse_algebra(" sl( 2 | 1 ) "));
}
