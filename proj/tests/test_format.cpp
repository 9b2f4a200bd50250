#include <doctest.h>

#include "qedtrees/format.hpp"
#include "qedtrees/hopf.hpp"
#include "qedtrees/qed.hpp"

using namespace qedtrees;

namespace {

const auto E = AlgebraTag::Electron;
const auto G = AlgebraTag::Photon;
const auto A = AlgebraTag::Charge;
const auto NC = AlgebraTag::ChargeNC;

Tree tr(const char* text) { return parse_tree(text); }

} // namespace

TEST_CASE("rationals")
{
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-4)) == "-4");
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("ascii output")
{
    CHECK(to_text(Element::unit(E)) == "1");
    CHECK(to_text(Element(E)) == "0");
    const auto x = Rational(-1, 2) * embed_tree(E, tr("Y2.2")) + Rational(3) * Element::unit(E);
    CHECK(to_text(x) == "-1/2*(e v (e v e)) + 3*1");
    CHECK(render_word(A, {Tree(), Tree()}) == "(e v e) (e v e)");
    CHECK(render_word(NC, {Tree(), Tree()}) == "((e v e) v e)");
    const auto t = delta_alpha(embed_tree(A, tr("Y1.1")));
    CHECK(to_text(t) == "(e v e) (x) 1 + 1 (x) (e v e)");
}

TEST_CASE("latex output")
{
    CHECK(render_latex(Tree()) == "\\|");
    CHECK(render_latex(tr("Y1.1")) == "(\\| \\vee \\|)");
    const auto x = Rational(2, 3) * embed_tree(G, tr("Y1.1")) - Rational(2) * Element::unit(G);
    CHECK(to_text(x, Format::Latex) == "\\frac{2}{3}\\, (\\| \\vee \\|) - 2\\, 1");
    const auto t = photon_renorm_coaction(embed_tree(G, tr("Y1.1")));
    CHECK(to_text(t, Format::Latex) == "(\\| \\vee \\|) \\otimes 1 + 1 \\otimes (\\| \\vee \\|)");
    CHECK(parse_format("latex") == Format::Latex);
    CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("parsing elements and tensors")
{
    CHECK(parse_element(E, "1") == Element::unit(E));
    CHECK(parse_element(E, "Y1.1 Y2.2") == Element::basis(E, {tr("Y1.1"), tr("Y2.2")}));
    CHECK(parse_element(E, "2*(e v e) - 1/3*1") ==
          Rational(2) * embed_tree(E, tr("Y1.1")) - Rational(1, 3) * Element::unit(E));
    CHECK(parse_element(A, "((e v e) v e)") == parse_element(A, "(e v e) (e v e)"));
    CHECK(parse_element(NC, "((e v e) v e)") == Element::basis(NC, {Tree(), Tree()}));
    CHECK(parse_element(E, "-Y2.2 + Y1.1 Y1.1") == antipode_p_e(embed_tree(E, tr("Y2.2"))));
    const auto t = parse_tensor({E, A, E}, "Y2.1 (x) 1 (x) 1 + Y1.1 (x) Y1.1 (x) 1 + 1 (x) 1 (x) Y2.1");
    CHECK(t == electron_renorm_coaction(embed_tree(E, tr("Y2.1"))));
    CHECK(parse_tensor({G, A}, "0").is_zero());

    CHECK_THROWS_AS(parse_element(E, "2*"), ParseError);
    CHECK_THROWS_AS(parse_element(E, "(e v e) +"), ParseError);
    CHECK_THROWS_AS(parse_tensor({E, A}, "Y1.1 (x) 1 (x) 1"), ParseError);
    CHECK_THROWS_AS(parse_tensor({E, A}, "Y1.1"), ParseError);
}

TEST_CASE("json round trips")
{
    for (auto tag : {G, E, A, NC}) {
        const auto x = Rational(5, 7) * embed_tree(tag, tr("Y3.3")) - embed_tree(tag, tr("Y1.1")) * embed_tree(tag, tr("Y2.1")) +
                       Element::unit(tag);
        CHECK(element_from_json(to_json(x)) == x);
        CHECK(element_from_json(nlohmann::json::parse(to_text(x, Format::Json))) == x);
    }
    const auto t = electron_renorm_coaction(embed_tree(E, tr("Y3.3")));
    CHECK(tensor_from_json(to_json(t)) == t);
    const auto j = to_json(t);
    CHECK(j.at("tags") == nlohmann::json::array({"He", "Halpha", "He"}));
    const auto d = delta_alpha_nc(embed_tree(NC, tr("Y3.1")));
    CHECK(tensor_from_json(to_json(d)) == d);
    CHECK(to_json(Rational(-3, 4)) == "-3/4");
    CHECK_THROWS(element_from_json(nlohmann::json::parse(R"({"tag": "Nope", "terms": []})")));
}
