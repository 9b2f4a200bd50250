#include <doctest.h>

#include "qedtrees/format.hpp"
#include "qedtrees/renormalization.hpp"

using namespace qedtrees;

namespace {

const auto E = AlgebraTag::Electron;
const auto G = AlgebraTag::Photon;
const auto A = AlgebraTag::Charge;

Tree tr(const char* text) { return parse_tree(text); }

// Sbar assembled term by term from R^e.
TruncatedSeries electron_renormalized(const Character& u, const Character& cg, const Character& ce, std::size_t n)
{
    std::vector<RingValue> coeffs(n + 1, RingValue::zero(u.dim()));
    for (std::size_t k = 0; k <= n; ++k)
        for (Tree t : enumerate(static_cast<std::uint32_t>(k)))
            coeffs[k] += renormalized_electron(u, cg, ce, t);
    return TruncatedSeries(n, coeffs);
}

} // namespace

TEST_CASE("evaluation and pairing")
{
    const auto u = make_toy_character(G, 3, Character::Kind::Matrix, 2, 4);
    CHECK(u.evaluate(Element::unit(G)) == RingValue::identity(2));
    const auto y = embed_tree(G, tr("Y1.1")), dd = embed_tree(G, tr("Y2.2"));
    CHECK(u.evaluate(y * dd) == u.value(tr("Y1.1")) * u.value(tr("Y2.2")));
    CHECK(u.evaluate(Rational(2) * y - dd) == RingValue(2) * u.value(tr("Y1.1")) - u.value(tr("Y2.2")));

    // Pairing U (x) U with Delta^p_gamma(t) is the coefficient of t in the square of the tree series.
    for (std::uint32_t n = 0; n <= 4; ++n)
        for (Tree t : enumerate(n)) {
            RingValue expected = RingValue::zero(2);
            for (std::uint32_t k = 0; k <= n; ++k)
                for (Tree a : enumerate(k))
                    for (Tree b : enumerate(n - k))
                        if (over(a, b) == t)
                            expected += (a.is_root() ? u.unit_value() : u.value(a)) *
                                        (b.is_root() ? u.unit_value() : u.value(b));
            const auto x = t.is_root() ? Element::unit(G) : embed_tree(G, t);
            CHECK(pair_evaluate({&u, &u}, delta_p_gamma(x)) == expected);
        }
}

TEST_CASE("Z3, Z2 and the Ward identification")
{
    const auto cg = make_toy_character(A, 9, Character::Kind::Scalar, 0, 4);
    const auto ce = make_toy_character(E, 9, Character::Kind::Scalar, 0, 4);
    CHECK(z3_series(Character::zero(A), 4) == TruncatedSeries::one(4));
    CHECK(z2_series(Character::zero(E), 4) == TruncatedSeries::one(4));

    const auto z3 = z3_series(cg, 4);
    CHECK(z3[1] == -cg.value(tr("Y1.1")));
    CHECK(z3[2] == -cg.value(tr("Y2.2")));
    CHECK(z3[3] == -cg.value(tr("Y3.4")) - cg.value(tr("Y3.5")));

    const auto inv = z2_inverse_series(ce, 4);
    CHECK(inv[1] == -ce.value(tr("Y1.1")));
    const auto y = ce.value(tr("Y1.1"));
    CHECK(inv[2] == -ce.value(tr("Y2.1")) - ce.value(tr("Y2.2")) + y * y);
    const auto z2 = z2_series(ce, 4);
    CHECK(gp_multiply(z2, inv) == TruncatedSeries::one(4));
    for (std::size_t k = 1; k <= 4; ++k) {
        RingValue sum = 0;
        for (Tree t : enumerate(static_cast<std::uint32_t>(k)))
            sum += ce.value(t);
        CHECK(z2[k] == sum);
    }

    CHECK(ward_alpha0(TruncatedSeries::one(4), 4) == TruncatedSeries::variable(4));
    const TruncatedSeries z(4, {RingValue(1), RingValue(-2)});
    const TruncatedSeries geometric(4, {RingValue(0), RingValue(1), RingValue(2), RingValue(4), RingValue(8)});
    CHECK(ward_alpha0(z, 4) == geometric);
    CHECK(ward_alpha0(z3, 4).is_gc());
    CHECK(ward_alpha0(z3, 4)[1] == RingValue(1));
}

TEST_CASE("renormalized values on small trees")
{
    const auto u = make_toy_character(G, 4, Character::Kind::Matrix, 2, 3);
    const auto cg = make_toy_character(A, 4, Character::Kind::Scalar, 0, 3);
    const auto I = RingValue::identity(2);
    CHECK(renormalized_photon(u, cg, Tree(), RenormalizationMaps::standard()) == I);
    const Tree y = tr("Y1.1"), du = tr("Y2.1"), dd = tr("Y2.2");
    CHECK(renormalized_photon(u, cg, y) == u.value(y) + cg.value(y) * I);
    CHECK(renormalized_photon(u, cg, du) ==
          u.value(du) + RingValue(2) * u.value(y) * cg.value(y) + cg.value(y) * cg.value(y));

    const auto ue = make_toy_character(E, 4, Character::Kind::Matrix, 2, 3);
    const auto ce = make_toy_character(E, 5, Character::Kind::Scalar, 0, 3);
    CHECK(renormalized_electron(ue, cg, ce, Tree()) == I);
    CHECK(renormalized_electron(ue, cg, ce, y) == ue.value(y) - ce.value(y));
    CHECK(renormalized_electron(ue, cg, ce, dd) ==
          ue.value(dd) - ue.value(y) * ce.value(y) - ce.value(dd) + ce.value(y) * ce.value(y));
    // Three-slot pairing on Y3.1 with the coefficient 2.
    const Tree t31 = tr("Y3.1");
    CHECK(renormalized_electron(ue, cg, ce, t31) == ue.value(t31) + RingValue(2) * ue.value(du) * cg.value(y) +
                                                         ue.value(y) * cg.value(y) * cg.value(y) - ce.value(t31));
}

TEST_CASE("Dyson formulas hold for scalar and matrix propagators")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto cg = make_toy_character(A, seed, Character::Kind::Scalar, 0, 4);
        const auto ce = make_toy_character(E, seed + 50, Character::Kind::Scalar, 0, 4);
        const auto ug = make_toy_character(G, seed, Character::Kind::Scalar, 0, 4);
        const auto ue = make_toy_character(E, seed, Character::Kind::Scalar, 0, 4);
        CHECK(dyson_check_photon(ug, cg, 4).passed);
        CHECK(dyson_check_electron(ue, cg, ce, 4).passed);
        const auto mg = make_toy_character(G, seed, Character::Kind::Matrix, 4, 3);
        const auto me = make_toy_character(E, seed, Character::Kind::Matrix, 4, 3);
        const auto cg3 = make_toy_character(A, seed, Character::Kind::Scalar, 0, 3);
        const auto ce3 = make_toy_character(E, seed + 50, Character::Kind::Scalar, 0, 3);
        const auto photon = dyson_check_photon(mg, cg3, 3);
        const auto electron = dyson_check_electron(me, cg3, ce3, 3);
        CHECK(photon.passed);
        CHECK(electron.passed);
        CHECK(electron.residuals.size() == 4);
        CHECK(!electron.first_failing_order);
    }
    const auto report = dyson_check_photon(Character::zero(G), Character::zero(A), 4);
    CHECK(report.passed);
    for (const auto& r : report.residuals)
        CHECK(r.is_zero());
}

TEST_CASE("the literal Z2 expansion does not satisfy the electron Dyson formula")
{
    const std::size_t n = 4;
    const auto cg = make_toy_character(A, 2, Character::Kind::Scalar, 0, n);
    const auto ce = make_toy_character(E, 3, Character::Kind::Scalar, 0, n);
    const auto u = make_toy_character(E, 4, Character::Kind::Scalar, 0, n);
    const auto bare = gp_action(tree_series(u, n), ward_alpha0(z3_series(cg, n), n));
    const auto ren = electron_renormalized(u, cg, ce, n);
    CHECK(ren * z2_series(ce, n) == bare);
    CHECK(!(ren * z2_inverse_series(ce, n) == bare));
}

TEST_CASE("broken structure maps are caught by the Dyson check")
{
    auto maps = RenormalizationMaps::standard();
    maps.antipode_p_e = [](const Element& x) { return x; };
    const auto cg = make_toy_character(A, 2, Character::Kind::Scalar, 0, 3);
    const auto ce = make_toy_character(E, 3, Character::Kind::Scalar, 0, 3);
    const auto u = make_toy_character(E, 4, Character::Kind::Scalar, 0, 3);
    const auto report = dyson_check_electron(u, cg, ce, 3, maps);
    CHECK(!report.passed);
    CHECK(report.first_failing_order.has_value());
}

TEST_CASE("character validation")
{
    const auto a = RingValue::matrix(2, {1, 1, 0, 1});
    const auto b = RingValue::matrix(2, {1, 0, 1, 1});
    CHECK_THROWS_AS(Character(A, {{tr("Y1.1"), a}, {tr("Y2.2"), b}}, 2), std::invalid_argument);
    CHECK_NOTHROW(Character(A, {{tr("Y1.1"), a}, {tr("Y2.2"), a * a}}, 2));
    CHECK_THROWS_AS(Character(AlgebraTag::ChargeNC, {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Character(A, {{tr("Y2.1"), RingValue(1)}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Character(G, {{Tree(), RingValue(1)}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Character(G, {{tr("Y1.1"), a}}, 3), std::invalid_argument);
    const auto chi = make_toy_character(G, 1, Character::Kind::Scalar, 0, 2);
    CHECK_THROWS_AS(chi.value(tr("Y3.1")), std::out_of_range);
    CHECK_THROWS_AS(chi.evaluate(Element::unit(E)), std::invalid_argument);

    const auto m = make_toy_character(A, 8, Character::Kind::Matrix, 3, 3);
    for (const auto& [t, v] : m.values())
        CHECK(v.is_scalar_multiple_of_identity());
    const auto again = make_toy_character(A, 8, Character::Kind::Matrix, 3, 3);
    CHECK(again.values() == m.values());
}

TEST_CASE("character json round trip")
{
    for (auto tag : {G, E, A}) {
        const auto chi = make_toy_character(tag, 12, Character::Kind::Matrix, 2, 3);
        const auto back = Character::from_json(chi.to_json());
        CHECK(back.tag() == chi.tag());
        CHECK(back.dim() == chi.dim());
        CHECK(back.values() == chi.values());
    }
}

TEST_CASE("general matrix counterterms")
{
    // Electron counterterms that do not commute with U still satisfy the
    // electron formula: C^e only ever multiplies from the right.
    const std::size_t n = 3;
    const auto cg = make_toy_character(A, 6, Character::Kind::Scalar, 0, n);
    const auto u = make_toy_character(E, 6, Character::Kind::Matrix, 2, n);
    const auto ce = make_toy_character(E, 7, Character::Kind::Matrix, 2, n);
    CHECK(dyson_check_electron(u, cg, ce, n).passed);
}
