#include <doctest.h>

#include "qedtrees/format.hpp"
#include "qedtrees/qed.hpp"
#include "reference_tables.hpp"

using namespace qedtrees;

namespace {

const auto E = AlgebraTag::Electron;
const auto G = AlgebraTag::Photon;
const auto A = AlgebraTag::Charge;
const auto NC = AlgebraTag::ChargeNC;

Tree tr(const char* text) { return parse_tree(text); }

Tensor expect(const Tensor& got, const char* text) { return parse_tensor(got.tags(), text); }

Element in(AlgebraTag tag, const char* text) { return text == std::string_view("1") ? Element::unit(tag) : parse_element(tag, text); }

} // namespace

TEST_CASE("electron coaction delta^e")
{
    auto d = delta_e_coaction(embed_tree(E, tr("Y1.1")));
    CHECK(d == expect(d, "Y1.1 (x) 1"));
    const auto y = embed_tree(E, tr("Y1.1"));
    d = delta_e_coaction(y * y);
    CHECK(d == expect(d, "Y1.1 Y1.1 (x) 1"));
    d = delta_e_coaction(embed_tree(E, tr("Y2.1")));
    CHECK(d == expect(d, "Y2.1 (x) 1 + Y1.1 (x) Y1.1"));
    CHECK(d.tags() == std::vector{E, A});
    CHECK(delta_gamma_coaction(Element::unit(G)) == tensor({Element::unit(G), Element::unit(A)}));
}

TEST_CASE("single-tree coaction: recursion against the lift")
{
    for (auto tag : {G, E})
        for (std::uint32_t n = 0; n <= 6; ++n)
            for (Tree t : enumerate(n))
                CHECK(tree_coaction(tag, t) == tree_coaction_recursive(tag, t));
}

TEST_CASE("Delta^e reference table")
{
    for (const auto& row : reference::electron_coaction) {
        INFO(row.input);
        const auto x = in(E, row.input);
        const auto got = electron_renorm_coaction(x);
        CHECK(got.tags() == std::vector{E, A, E});
        CHECK(got == expect(got, row.expected));
        CHECK(electron_renorm_coaction_recursive(x) == got);
    }
}

TEST_CASE("Delta^gamma reference table")
{
    for (const auto& row : reference::photon_coaction) {
        INFO(row.input);
        const auto got = photon_renorm_coaction(in(G, row.input));
        CHECK(got.tags() == std::vector{G, A});
        CHECK(got == expect(got, row.expected));
    }
}

TEST_CASE("Delta^gamma agrees with the lifted charge coproduct")
{
    for (std::uint32_t n = 0; n <= 6; ++n)
        for (Tree t : enumerate(n)) {
            const auto lhs = photon_renorm_coaction(embed_tree(G, t));
            Tensor rhs({G, A});
            const auto lifted = delta_alpha_nc(embed_tree(NC, t));
            for (const auto& [key, c] : lifted.terms()) {
                const Tree left = tree_of_word(NC, key[0]);
                rhs.add_term({left.is_root() ? Word{} : Word{left}, normalize_word(A, key[1])}, c);
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("sigma")
{
    const auto y = embed_tree(G, tr("Y1.1"));
    CHECK(sigma(y * y) == embed_tree(A, tr("Y2.1")));
    CHECK(sigma(Element::unit(G)) == Element::unit(A));
    for (std::uint32_t n = 1; n <= 4; ++n)
        for (Tree t : enumerate(n))
            CHECK(sigma(embed_tree(G, t)) == embed_tree(A, t));
    const auto a = embed_tree(G, tr("Y2.2")), b = embed_tree(G, tr("Y3.4"));
    CHECK(sigma(a * b) == sigma(a) * sigma(b));
}

TEST_CASE("delta^sigma combinator")
{
    const LinearMap cop = [](const Element& x) { return delta_p_gamma(x); };
    const LinearMap coa = [](const Element& x) { return delta_gamma_coaction(x); };
    const ElementMap sig = [](const Element& x) { return sigma(x); };
    for (std::uint32_t n = 0; n <= 4; ++n)
        for (Tree t : enumerate(n)) {
            const auto x = t.is_root() ? Element::unit(G) : embed_tree(G, t);
            CHECK(delta_sigma(x, cop, coa, sig) == photon_renorm_coaction(x));
        }
    CHECK(delta_sigma(Element::unit(G), cop, coa, sig) == tensor({Element::unit(G), Element::unit(A)}));
}

TEST_CASE("QED coproduct and antipode")
{
    const auto one_a = Element::unit(A), one_e = Element::unit(E);
    const auto y_a = embed_tree(A, tr("Y1.1")), y_e = embed_tree(E, tr("Y1.1"));
    const auto four = [](const Element& a, const Element& b, const Element& c, const Element& d) {
        return tensor({a, b, c, d});
    };

    CHECK(qed_coproduct(qed_element(one_a, y_e)) == four(one_a, y_e, one_a, one_e) + four(one_a, one_e, one_a, y_e));
    CHECK(qed_coproduct(qed_element(y_a, one_e)) == four(y_a, one_e, one_a, one_e) + four(one_a, one_e, y_a, one_e));
    CHECK(qed_coproduct(qed_element(one_a, one_e)) == four(one_a, one_e, one_a, one_e));

    CHECK(qed_antipode(qed_element(one_a, one_e)) == qed_element(one_a, one_e));
    CHECK(qed_antipode(qed_element(y_a, one_e)) == qed_element(-y_a, one_e));
    CHECK(qed_antipode(qed_element(one_a, y_e)) == qed_element(one_a, -y_e));

    const auto s = qed_semidirect();
    const auto x = qed_element(embed_tree(A, tr("Y2.2")), embed_tree(E, tr("Y2.1")));
    CHECK(s.counit(x) == 0);
    CHECK(s.counit(qed_element(one_a, one_e)) == 1);
}
