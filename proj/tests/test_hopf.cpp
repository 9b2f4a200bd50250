#include <doctest.h>

#include <thread>

#include "qedtrees/format.hpp"
#include "qedtrees/hopf.hpp"
#include "reference_tables.hpp"

using namespace qedtrees;

namespace {

const auto E = AlgebraTag::Electron;
const auto G = AlgebraTag::Photon;
const auto A = AlgebraTag::Charge;
const auto NC = AlgebraTag::ChargeNC;

Tree tr(const char* text) { return parse_tree(text); }

Tensor expect(const Tensor& got, const char* text) { return parse_tensor(got.tags(), text); }

} // namespace

TEST_CASE("pruning coproducts on small trees")
{
    const Tree y = tr("Y1.1"), dd = tr("Y2.2");
    auto d = delta_p_e(embed_tree(E, y));
    CHECK(d == expect(d, "Y1.1 (x) 1 + 1 (x) Y1.1"));
    d = delta_p_e(embed_tree(E, dd));
    CHECK(d == expect(d, "Y2.2 (x) 1 + Y1.1 (x) Y1.1 + 1 (x) Y2.2"));
    d = delta_p_gamma(embed_tree(G, tr("Y3.2")));
    CHECK(d == expect(d, "Y3.2 (x) 1 + Y2.2 (x) Y1.1 + 1 (x) Y3.2"));
    d = delta_p_e(Element::unit(E));
    CHECK(d == tensor({Element::unit(E), Element::unit(E)}));
    CHECK_THROWS(delta_p_e(embed_tree(G, y)));
}

TEST_CASE("recursive and factorized pruning coproducts agree")
{
    for (auto tag : {G, E})
        for (std::uint32_t n = 0; n <= 7; ++n)
            for (Tree t : enumerate(n))
                CHECK(pruning_coproduct_tree(tag, t) == pruning_coproduct_factorized(tag, t));
}

TEST_CASE("pruning coproduct is multiplicative on words")
{
    const auto a = embed_tree(E, tr("Y2.1"));
    const auto b = embed_tree(E, tr("Y1.1"));
    CHECK(delta_p_e(a * b) == delta_p_e(a) * delta_p_e(b));
}

TEST_CASE("reduced pruning")
{
    CHECK(reduced_pruning(tr("Y1.1")).is_zero());
    const auto p = reduced_pruning(tr("Y2.2"));
    CHECK(p == expect(p, "Y1.1 (x) Y1.1"));
    CHECK_THROWS(reduced_pruning(Tree()));
}

TEST_CASE("antipode of He on the reference trees")
{
    for (const auto& row : reference::antipode_p_e) {
        INFO(row.input);
        CHECK(antipode_p_e(parse_element(E, row.input)) == parse_element(E, row.expected));
        CHECK(to_text(antipode_p_e(parse_element(E, row.input))) == reference::spelled(row.expected));
    }
    CHECK(antipode_p_e(Element::unit(E)) == Element::unit(E));
    const auto a = embed_tree(E, tr("Y2.2")), b = embed_tree(E, tr("Y2.1"));
    CHECK(antipode_p_e(a * b) == antipode_p_e(b) * antipode_p_e(a));
}

TEST_CASE("charge coproduct and coaction on the reference generators")
{
    for (const auto& row : reference::delta_alpha) {
        INFO(row.input);
        const auto got = delta_alpha(parse_element(A, row.input));
        CHECK(got == expect(got, row.expected));
        CHECK(to_text(got) == reference::spelled(row.expected));
    }
    for (const auto& row : reference::delta_small) {
        INFO(row.input);
        const auto got = delta_small(parse_element(A, row.input));
        CHECK(got == expect(got, row.expected));
        CHECK(to_text(got) == reference::spelled(row.expected));
    }
}

TEST_CASE("charge antipode")
{
    CHECK(antipode_alpha(embed_tree(A, tr("Y1.1"))) == -embed_tree(A, tr("Y1.1")));
    CHECK(antipode_alpha(Element::unit(A)) == Element::unit(A));
    CHECK(antipode_alpha(embed_tree(A, tr("Y3.4"))) == parse_element(A, "-Y3.4 + Y2.2 Y1.1"));
    const auto x = embed_tree(A, tr("Y3.4"));
    CHECK(multiply_slots(apply_on_slot(delta_alpha(x), 0, {A}, [](const Word& w) {
              return as_tensor(antipode_alpha(Element::basis(A, w)));
          })).is_zero());
}

TEST_CASE("noncommutative lift")
{
    auto d = delta_alpha_nc(embed_tree(NC, tr("Y1.1")));
    CHECK(d == expect(d, "Y1.1 (x) 1 + 1 (x) Y1.1"));
    d = delta_alpha_nc(embed_tree(NC, tr("Y2.1")));
    CHECK(d == expect(d, "Y2.1 (x) 1 + 2*Y1.1 (x) Y1.1 + 1 (x) Y2.1"));
    for (std::uint32_t n = 0; n <= 5; ++n)
        for (Tree u : enumerate(n)) {
            const auto nc = delta_alpha_nc(embed_tree(NC, v_wrap(u)));
            CHECK(abelianize_slot(abelianize_slot(nc, 0), 1) == delta_alpha(embed_tree(A, v_wrap(u))));
        }
    bool asymmetric = false;
    for (std::uint32_t n = 1; n <= 4 && !asymmetric; ++n)
        for (Tree t : enumerate(n)) {
            const auto c = delta_alpha_nc(embed_tree(NC, t));
            if (!(c == swap_slots(c, 0, 1)))
                asymmetric = true;
        }
    CHECK(asymmetric);
}

TEST_CASE("charge structures are safe to share between threads")
{
    const ChargeHopf fresh;
    std::vector<Tensor> results(8);
    std::vector<std::thread> pool;
    const Tree t = enumerate(6)[17];
    for (std::size_t k = 0; k < results.size(); ++k)
        pool.emplace_back([&, k] { results[k] = fresh.coproduct_nc(embed_tree(NC, t)); });
    for (auto& th : pool)
        th.join();
    for (const auto& r : results)
        CHECK(r == ChargeHopf::standard().coproduct_nc(embed_tree(NC, t)));
}

TEST_CASE("generator hook rewrites coproducts")
{
    const ChargeHopf broken([](Tree u, Tensor& c) {
        if (u.is_root())
            c = Tensor(c.tags());
    });
    CHECK(broken.coproduct(embed_tree(A, tr("Y1.1"))).is_zero());
    CHECK(!ChargeHopf::standard().coproduct(embed_tree(A, tr("Y1.1"))).is_zero());
}
