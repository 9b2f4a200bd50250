#include <doctest.h>

#include "qedtrees/algebra.hpp"
#include "qedtrees/format.hpp"

using namespace qedtrees;

namespace {

const auto E = AlgebraTag::Electron;
const auto G = AlgebraTag::Photon;
const auto A = AlgebraTag::Charge;
const auto NC = AlgebraTag::ChargeNC;

Tree tr(const char* text) { return parse_tree(text); }

} // namespace

TEST_CASE("linear structure")
{
    const auto one = Element::unit(E);
    CHECK(one.size() == 1);
    CHECK(one.coefficient({}) == 1);
    const auto t = embed_tree(E, tr("Y2.1"));
    CHECK((t + (-t)).is_zero());
    CHECK(Rational(2) * t + Rational(3) * t == Rational(5) * t);
    Element x(E);
    x.add_term({tr("Y1.1")}, 1);
    x.add_term({tr("Y1.1")}, -1);
    CHECK(x.is_zero());
    CHECK(x.terms().empty());
}

TEST_CASE("products in the four algebras")
{
    const Tree y = tr("Y1.1"), dd = tr("Y2.2"), du = tr("Y2.1"), e;

    CHECK(embed_tree(E, y) * embed_tree(E, dd) == Element::basis(E, {y, dd}));
    CHECK(!(embed_tree(E, y) * embed_tree(E, dd) == embed_tree(E, dd) * embed_tree(E, y)));

    const auto a = Element::basis(A, {du});
    const auto b = Element::basis(A, {e});
    CHECK(a * b == b * a);
    CHECK((a * b).terms().begin()->first == Word{e, du});

    const auto v = Element::basis(NC, {e});
    const auto vv = v * v;
    CHECK(vv == Element::basis(NC, {e, e}));
    CHECK(tree_of_word(NC, vv.terms().begin()->first) == du);
    CHECK(!(Element::basis(NC, {e}) * Element::basis(NC, {y}) == Element::basis(NC, {y}) * Element::basis(NC, {e})));

    CHECK_THROWS_AS(embed_tree(E, y) * embed_tree(G, y), std::invalid_argument);
}

TEST_CASE("embed_tree")
{
    CHECK(embed_tree(A, Tree()) == Element::unit(A));
    CHECK(embed_tree(A, tr("Y2.1")) == Element::basis(A, {Tree(), Tree()}));
    CHECK(embed_tree(E, tr("Y3.1")) == Element::basis(E, {tr("Y3.1")}));
    CHECK(embed_tree(E, Tree()) == Element::unit(E));
    for (std::uint32_t n = 0; n <= 3; ++n)
        for (Tree t : enumerate(n))
            for (std::uint32_t m = 0; m + n <= 4; ++m)
                for (Tree s : enumerate(m)) {
                    CHECK(embed_tree(A, over(t, s)) == embed_tree(A, t) * embed_tree(A, s));
                    CHECK(embed_tree(NC, over(t, s)) == embed_tree(NC, t) * embed_tree(NC, s));
                }
}

TEST_CASE("counit and grading")
{
    CHECK(counit(Element::unit(G)) == 1);
    CHECK(counit(embed_tree(G, tr("Y1.1"))) == 0);
    CHECK(counit(Rational(3) * Element::unit(A) + embed_tree(A, tr("Y2.2"))) == 3);

    CHECK(grade_components(Element::unit(E)).size() == 1);
    CHECK(grade_components(Element::unit(E)).begin()->first == 0);
    const auto word = Element::basis(E, {tr("Y1.1"), tr("Y2.2")});
    CHECK(grade_components(word).begin()->first == 3);
    CHECK(grade_components(Element::basis(A, {tr("Y2.1")})).begin()->first == 3);
    CHECK(total_order(A, {Tree(), Tree()}) == 2);
    const auto mixed = word + embed_tree(E, tr("Y1.1"));
    const auto parts = grade_components(mixed);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(1) == embed_tree(E, tr("Y1.1")));
    CHECK(parts.at(3) == word);
}

TEST_CASE("tensors and slot operations")
{
    const Tree y = tr("Y1.1"), dd = tr("Y2.2");
    const auto x = tensor({embed_tree(E, y), embed_tree(A, y), Element::unit(E), embed_tree(A, dd)});
    // m_24: slot 2 times slot 4, kept as the middle slot.
    const auto m = slot_multiply(x, 1, 3, 1);
    CHECK(m.tags() == std::vector{E, A, E});
    CHECK(m == tensor({embed_tree(E, y), embed_tree(A, over(y, dd)), Element::unit(E)}));
    CHECK(over(y, dd) == tr("Y3.3"));

    const auto units = tensor({embed_tree(E, y), Element::unit(A), embed_tree(E, dd), Element::unit(A)});
    CHECK(slot_multiply(units, 1, 3, 2) == tensor({embed_tree(E, y), embed_tree(E, dd), Element::unit(A)}));

    const auto flip = swap_slots(tensor({embed_tree(E, y), embed_tree(E, dd)}), 0, 1);
    CHECK(flip == tensor({embed_tree(E, dd), embed_tree(E, y)}));

    const auto two = tensor({embed_tree(E, y), embed_tree(E, dd)});
    CHECK(multiply_slots(two) == Element::basis(E, {y, dd}));
    CHECK(to_element(counit_slot(tensor({embed_tree(E, y), Element::unit(E)}), 1)) == embed_tree(E, y));
    CHECK(counit_slot(two, 1).is_zero());

    const auto nc = tensor({Element::basis(NC, {y, Tree()}), Element::unit(E)});
    CHECK(abelianize_slot(nc, 0) == tensor({Element::basis(A, {Tree(), y}), Element::unit(E)}));
    CHECK(abelianize(Element::basis(NC, {y, Tree()}) - Element::basis(NC, {Tree(), y})).is_zero());

    const auto doubled = map_slot(two, 0, E, [](const Word& w) { return Rational(2) * Element::basis(E, w); });
    CHECK(doubled == Rational(2) * two);

    CHECK(tensor({embed_tree(E, y)}) * tensor({embed_tree(E, dd)}) == tensor({Element::basis(E, {y, dd})}));
}

TEST_CASE("ring axioms on small words")
{
    for (auto tag : {G, E, A, NC}) {
        std::vector<Element> basis;
        for (std::uint32_t n = 0; n <= 2; ++n)
            for (Tree t : enumerate(n))
                basis.push_back(embed_tree(tag, t));
        for (const auto& a : basis)
            for (const auto& b : basis)
                for (const auto& c : basis) {
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                    CHECK((a + b) * c == a * c + b * c);
                }
        for (const auto& a : basis)
            CHECK(Element::unit(tag) * a == a);
    }
}
