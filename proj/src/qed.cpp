#include "qedtrees/qed.hpp"

#include <stdexcept>
#include <string>

namespace qedtrees {

namespace {

constexpr auto kCharge = AlgebraTag::Charge;

Word letter(Tree t) { return t.is_root() ? Word{} : Word{t}; }

Word concat(const Word& a, const Word& b)
{
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void require_propagator_tag(AlgebraTag tag)
{
    if (tag != AlgebraTag::Photon && tag != AlgebraTag::Electron)
        throw std::invalid_argument("expected Hgamma or He, got " + std::string(tag_name(tag)));
}

void require_tag(const Element& x, AlgebraTag tag, const char* what)
{
    if (x.tag() != tag)
        throw std::invalid_argument(std::string(what) + " expects " + std::string(tag_name(tag)) + ", got " +
                                    std::string(tag_name(x.tag())));
}

// Multiplicative extension of a per-tree tensor map over the words of x.
template <typename OnTree>
Tensor extend_multiplicatively(const Element& x, const std::vector<AlgebraTag>& tags, OnTree&& on_tree)
{
    Tensor out(tags);
    Tensor::Key unit_key(tags.size());
    for (const auto& [word, c] : x.terms()) {
        Tensor image = Tensor::basis(tags, unit_key);
        for (Tree t : word)
            image = image * on_tree(t);
        image *= c;
        out += image;
    }
    return out;
}

} // namespace

// ------------------------------------------------------------ coactions

Tensor tree_coaction(AlgebraTag tag, Tree t, const ChargeHopf& charge)
{
    require_propagator_tag(tag);
    Tensor out({tag, kCharge});
    for (const auto& [key, c] : charge.tree_coaction_nc(t).terms())
        out.add_term({letter(compose_over(key[0])), key[1]}, c);
    return out;
}

Tensor tree_coaction_recursive(AlgebraTag tag, Tree t, const ChargeHopf& charge)
{
    require_propagator_tag(tag);
    Tensor out({tag, kCharge});
    if (t.is_root()) {
        out.add_term({{}, {}}, 1);
        return out;
    }
    const auto [l, r] = un_graft(t);
    const Tensor split = charge.coproduct_nc(Element::basis(AlgebraTag::ChargeNC, decompose_over(l)));
    const Tensor inner = tree_coaction_recursive(tag, r, charge);
    for (const auto& [lk, lc] : split.terms())
        for (const auto& [rk, rc] : inner.terms()) {
            const Tree left = graft(compose_over(lk[0]), tree_of_word(tag, rk[0]));
            out.add_term({letter(left), concat(lk[1], rk[1])}, lc * rc);
        }
    return out;
}

Tensor delta_gamma_coaction(const Element& x, const ChargeHopf& charge)
{
    require_tag(x, AlgebraTag::Photon, "delta_gamma_coaction");
    return extend_multiplicatively(x, {AlgebraTag::Photon, kCharge},
                                   [&](Tree t) { return tree_coaction(AlgebraTag::Photon, t, charge); });
}

Tensor delta_e_coaction(const Element& x, const ChargeHopf& charge)
{
    require_tag(x, AlgebraTag::Electron, "delta_e_coaction");
    return extend_multiplicatively(x, {AlgebraTag::Electron, kCharge},
                                   [&](Tree t) { return tree_coaction(AlgebraTag::Electron, t, charge); });
}

// ------------------------------------------------------------ sigma, Delta^gamma

Element sigma(const Element& x)
{
    require_tag(x, AlgebraTag::Photon, "sigma");
    Element out(kCharge);
    for (const auto& [word, c] : x.terms()) {
        Word image;
        for (Tree t : word) {
            const auto generators = decompose_over(t);
            image.insert(image.end(), generators.begin(), generators.end());
        }
        out.add_term(std::move(image), c);
    }
    return out;
}

Tensor delta_sigma(const Element& x, const LinearMap& coproduct_p, const LinearMap& coaction, const ElementMap& sigma_map)
{
    const auto p_tag = x.tag();
    const auto c_tag = coaction(Element::unit(p_tag)).tags().at(1);
    Tensor split = coproduct_p(x);
    split = apply_on_slot(split, 0, {p_tag, c_tag},
                          [&](const Word& w) { return coaction(Element::basis(p_tag, w)); });
    split = map_slot(split, 2, c_tag, [&](const Word& w) { return sigma_map(Element::basis(p_tag, w)); });
    return slot_multiply(split, 1, 2, 1);
}

Tensor photon_renorm_coaction(const Element& x, const ChargeHopf& charge)
{
    require_tag(x, AlgebraTag::Photon, "photon_renorm_coaction");
    return delta_sigma(
        x, delta_p_gamma, [&](const Element& y) { return delta_gamma_coaction(y, charge); }, sigma);
}

// ------------------------------------------------------------ Delta^e

Tensor electron_renorm_coaction(const Element& x, const ChargeHopf& charge)
{
    require_tag(x, AlgebraTag::Electron, "electron_renorm_coaction");
    return apply_on_slot(delta_p_e(x), 0, {AlgebraTag::Electron, kCharge}, [&](const Word& w) {
        return delta_e_coaction(Element::basis(AlgebraTag::Electron, w), charge);
    });
}

namespace {

Tensor electron_tree_recursive(Tree t, const ChargeHopf& charge)
{
    constexpr auto e = AlgebraTag::Electron;
    Tensor out({e, kCharge, e});
    if (t.is_root()) {
        out.add_term({{}, {}, {}}, 1);
        return out;
    }
    // 1 (x) 1 (x) (l v r) + sum l(1) v r(1) (x) l(2) / r(2) (x) r(3)
    out.add_term({{}, {}, letter(t)}, 1);
    const auto [l, r] = un_graft(t);
    const Tensor split = charge.coproduct_nc(Element::basis(AlgebraTag::ChargeNC, decompose_over(l)));
    const Tensor inner = electron_tree_recursive(r, charge);
    for (const auto& [lk, lc] : split.terms())
        for (const auto& [rk, rc] : inner.terms()) {
            const Tree left = graft(compose_over(lk[0]), tree_of_word(e, rk[0]));
            out.add_term({letter(left), concat(lk[1], rk[1]), rk[2]}, lc * rc);
        }
    return out;
}

} // namespace

Tensor electron_renorm_coaction_recursive(const Element& x, const ChargeHopf& charge)
{
    require_tag(x, AlgebraTag::Electron, "electron_renorm_coaction_recursive");
    return extend_multiplicatively(x, {AlgebraTag::Electron, kCharge, AlgebraTag::Electron},
                                   [&](Tree t) { return electron_tree_recursive(t, charge); });
}

// ------------------------------------------------------------ semidirect

Tensor Semidirect::right_coaction(const Element& b) const
{
    return apply_on_slot(coproduct_p(b), 0, {p_tag, c_tag},
                         [&](const Word& w) { return coaction(Element::basis(p_tag, w)); });
}

Tensor Semidirect::coproduct(const Tensor& x) const
{
    if (x.tags() != tags())
        throw std::invalid_argument("semidirect coproduct: element has the wrong slot algebras");
    Tensor out({c_tag, p_tag, c_tag, p_tag});
    for (const auto& [key, coeff] : x.terms()) {
        const Tensor a_split = coproduct_c(Element::basis(c_tag, key[0]));
        const Tensor b_split = right_coaction(Element::basis(p_tag, key[1]));
        for (const auto& [ak, ac] : a_split.terms())
            for (const auto& [bk, bc] : b_split.terms())
                out.add_term({ak[0], bk[0], multiply_words(c_tag, ak[1], bk[1]), bk[2]}, coeff * ac * bc);
    }
    return out;
}

Rational Semidirect::counit(const Tensor& x) const
{
    if (x.tags() != tags())
        throw std::invalid_argument("semidirect counit: element has the wrong slot algebras");
    return x.coefficient({{}, {}});
}

Tensor Semidirect::antipode(const Tensor& x) const
{
    if (x.tags() != tags())
        throw std::invalid_argument("semidirect antipode: element has the wrong slot algebras");
    Tensor out(tags());
    for (const auto& [key, coeff] : x.terms()) {
        const Element sa = antipode_c(Element::basis(c_tag, key[0]));
        const Tensor twisted = coaction(antipode_p(Element::basis(p_tag, key[1])));
        for (const auto& [tk, tc] : twisted.terms()) {
            Tensor term = tensor({sa * antipode_c(Element::basis(c_tag, tk[1])), Element::basis(p_tag, tk[0])});
            term *= coeff * tc;
            out += term;
        }
    }
    return out;
}

Semidirect qed_semidirect(const ChargeHopf& charge)
{
    Semidirect s;
    s.c_tag = kCharge;
    s.p_tag = AlgebraTag::Electron;
    s.coproduct_c = [&charge](const Element& x) { return charge.coproduct(x); };
    s.coproduct_p = delta_p_e;
    s.coaction = [&charge](const Element& x) { return delta_e_coaction(x, charge); };
    s.antipode_c = [&charge](const Element& x) { return charge.antipode(x); };
    s.antipode_p = antipode_p_e;
    return s;
}

Semidirect photon_semidirect(const ChargeHopf& charge)
{
    Semidirect s;
    s.c_tag = kCharge;
    s.p_tag = AlgebraTag::Photon;
    s.coproduct_c = [&charge](const Element& x) { return charge.coproduct(x); };
    s.coproduct_p = delta_p_gamma;
    s.coaction = [&charge](const Element& x) { return delta_gamma_coaction(x, charge); };
    s.antipode_c = [&charge](const Element& x) { return charge.antipode(x); };
    s.antipode_p = antipode_p_gamma;
    return s;
}

Tensor qed_element(const Element& a, const Element& b)
{
    require_tag(a, kCharge, "qed_element");
    require_tag(b, AlgebraTag::Electron, "qed_element");
    return tensor({a, b});
}

Tensor qed_coproduct(const Tensor& x)
{
    static const Semidirect qed = qed_semidirect();
    return qed.coproduct(x);
}

Tensor qed_antipode(const Tensor& x)
{
    static const Semidirect qed = qed_semidirect();
    return qed.antipode(x);
}

} // namespace qedtrees
