#include "qedtrees/hopf.hpp"

#include <stdexcept>
#include <string>

#include "memo.hpp"

namespace qedtrees {

namespace {

Word letter(Tree t) { return t.is_root() ? Word{} : Word{t}; }

void require_pruning_tag(AlgebraTag tag)
{
    if (tag != AlgebraTag::Photon && tag != AlgebraTag::Electron)
        throw std::invalid_argument("pruning maps act on Hgamma or He, got " + std::string(tag_name(tag)));
}

void require_tag(const Element& x, AlgebraTag tag, const char* what)
{
    if (x.tag() != tag)
        throw std::invalid_argument(std::string(what) + " expects " + std::string(tag_name(tag)) + ", got " +
                                    std::string(tag_name(x.tag())));
}

detail::TreeMemo<Tensor>& pruning_memo(AlgebraTag tag)
{
    static detail::TreeMemo<Tensor> over_memo, under_memo;
    return tag == AlgebraTag::Photon ? over_memo : under_memo;
}

detail::TreeMemo<Element>& pruning_antipode_memo(AlgebraTag tag)
{
    static detail::TreeMemo<Element> over_memo, under_memo;
    return tag == AlgebraTag::Photon ? over_memo : under_memo;
}

} // namespace

// ------------------------------------------------------------ pruning

const Tensor& pruning_coproduct_tree(AlgebraTag tag, Tree t)
{
    require_pruning_tag(tag);
    return pruning_memo(tag).get(t, [&] {
        Tensor out({tag, tag});
        if (t.is_root()) {
            out.add_term({{}, {}}, 1);
            return out;
        }
        const auto [l, r] = un_graft(t);
        if (tag == AlgebraTag::Photon) {
            // (l v r) (x) e + sum l1 (x) (l2 v r)
            out.add_term({letter(t), {}}, 1);
            for (const auto& [key, c] : pruning_coproduct_tree(tag, l).terms())
                out.add_term({key[0], letter(graft(tree_of_word(tag, key[1]), r))}, c);
        } else {
            // e (x) (l v r) + sum (l v r1) (x) r2
            out.add_term({{}, letter(t)}, 1);
            for (const auto& [key, c] : pruning_coproduct_tree(tag, r).terms())
                out.add_term({letter(graft(l, tree_of_word(tag, key[0]))), key[1]}, c);
        }
        return out;
    });
}

Tensor pruning_coproduct_factorized(AlgebraTag tag, Tree t)
{
    require_pruning_tag(tag);
    const bool over_side = tag == AlgebraTag::Photon;
    const auto args = over_side ? decompose_over(t) : decompose_under(t);
    const std::span<const Tree> all(args);
    Tensor out({tag, tag});
    for (std::size_t k = 0; k <= args.size(); ++k) {
        const auto head = all.first(k);
        const auto tail = all.subspan(k);
        const Tree t1 = over_side ? compose_over(head) : compose_under(head);
        const Tree t2 = over_side ? compose_over(tail) : compose_under(tail);
        out.add_term({letter(t1), letter(t2)}, 1);
    }
    return out;
}

Tensor pruning_coproduct(const Element& x)
{
    const auto tag = x.tag();
    require_pruning_tag(tag);
    Tensor out({tag, tag});
    const Tensor unit = Tensor::basis({tag, tag}, {{}, {}});
    for (const auto& [word, c] : x.terms()) {
        Tensor image = unit;
        for (Tree t : word)
            image = image * pruning_coproduct_tree(tag, t);
        image *= c;
        out += image;
    }
    return out;
}

Tensor delta_p_gamma(const Element& x)
{
    require_tag(x, AlgebraTag::Photon, "delta_p_gamma");
    return pruning_coproduct(x);
}

Tensor delta_p_e(const Element& x)
{
    require_tag(x, AlgebraTag::Electron, "delta_p_e");
    return pruning_coproduct(x);
}

Tensor reduced_pruning(AlgebraTag tag, Tree t)
{
    if (t.is_root())
        throw std::domain_error("the reduced pruning coproduct is defined for t != e");
    Tensor out = pruning_coproduct_tree(tag, t);
    out.add_term({letter(t), {}}, -1);
    out.add_term({{}, letter(t)}, -1);
    return out;
}

Tensor reduced_pruning(Tree t) { return reduced_pruning(AlgebraTag::Electron, t); }

const Element& pruning_antipode_tree(AlgebraTag tag, Tree t)
{
    require_pruning_tag(tag);
    return pruning_antipode_memo(tag).get(t, [&] {
        if (t.is_root())
            return Element::unit(tag);
        Element out = -Element::basis(tag, letter(t));
        const Tensor reduced = reduced_pruning(tag, t);
        for (const auto& [key, c] : reduced.terms()) {
            Element term = pruning_antipode_tree(tag, tree_of_word(tag, key[0])) * Element::basis(tag, key[1]);
            term *= c;
            out -= term;
        }
        return out;
    });
}

Element pruning_antipode(const Element& x)
{
    const auto tag = x.tag();
    require_pruning_tag(tag);
    return apply_linear(x, [&](const Word& word) {
        Element out = Element::unit(tag);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            out = out * pruning_antipode_tree(tag, *it);
        return out;
    });
}

Element antipode_p_e(const Element& x)
{
    require_tag(x, AlgebraTag::Electron, "antipode_p_e");
    return pruning_antipode(x);
}

Element antipode_p_gamma(const Element& x)
{
    require_tag(x, AlgebraTag::Photon, "antipode_p_gamma");
    return pruning_antipode(x);
}

// ------------------------------------------------------------ charge

struct ChargeHopf::Caches {
    detail::TreeMemo<Tensor> coproduct_nc;
    detail::TreeMemo<Tensor> coproduct;
    detail::TreeMemo<Tensor> coaction_nc;
    detail::TreeMemo<Element> antipode;
    detail::TreeMemo<Element> antipode_nc;
};

ChargeHopf::ChargeHopf() : caches_(std::make_unique<Caches>()) {}

ChargeHopf::ChargeHopf(GeneratorHook hook) : caches_(std::make_unique<Caches>()), hook_(std::move(hook)) {}

ChargeHopf::~ChargeHopf() = default;

const ChargeHopf& ChargeHopf::standard()
{
    static const ChargeHopf instance;
    return instance;
}

const Tensor& ChargeHopf::generator_coproduct_nc(Tree u) const
{
    return caches_->coproduct_nc.get(u, [&] {
        constexpr auto nc = AlgebraTag::ChargeNC;
        Tensor out = Tensor::basis({nc, nc}, {{}, {u}});
        // delta(V(u)) = (V (x) Id) delta(u)
        for (const auto& [key, c] : tree_coaction_nc(u).terms())
            out.add_term({{compose_over(key[0])}, key[1]}, c);
        if (hook_)
            hook_(u, out);
        return out;
    });
}

const Tensor& ChargeHopf::generator_coproduct(Tree u) const
{
    return caches_->coproduct.get(u, [&] {
        return abelianize_slot(abelianize_slot(generator_coproduct_nc(u), 0), 1);
    });
}

const Tensor& ChargeHopf::tree_coaction_nc(Tree t) const
{
    return caches_->coaction_nc.get(t, [&] {
        constexpr auto nc = AlgebraTag::ChargeNC;
        if (t.is_root())
            return Tensor::basis({nc, nc}, {{}, {}});
        // delta(l v r) = Delta(l) / delta(V(r))
        const auto [l, r] = un_graft(t);
        Tensor v_coaction({nc, nc});
        for (const auto& [key, c] : tree_coaction_nc(r).terms())
            v_coaction.add_term({{compose_over(key[0])}, key[1]}, c);
        return coproduct_nc(Element::basis(nc, decompose_over(l))) * v_coaction;
    });
}

Tensor ChargeHopf::coproduct_nc(const Element& x) const
{
    require_tag(x, AlgebraTag::ChargeNC, "coproduct_nc");
    constexpr auto nc = AlgebraTag::ChargeNC;
    Tensor out({nc, nc});
    for (const auto& [word, c] : x.terms()) {
        Tensor image = Tensor::basis({nc, nc}, {{}, {}});
        for (Tree u : word)
            image = image * generator_coproduct_nc(u);
        image *= c;
        out += image;
    }
    return out;
}

Tensor ChargeHopf::coproduct(const Element& x) const
{
    require_tag(x, AlgebraTag::Charge, "coproduct");
    constexpr auto ab = AlgebraTag::Charge;
    Tensor out({ab, ab});
    for (const auto& [word, c] : x.terms()) {
        Tensor image = Tensor::basis({ab, ab}, {{}, {}});
        for (Tree u : word)
            image = image * generator_coproduct(u);
        image *= c;
        out += image;
    }
    return out;
}

Tensor ChargeHopf::coaction_nc(const Element& x) const
{
    require_tag(x, AlgebraTag::ChargeNC, "coaction_nc");
    constexpr auto nc = AlgebraTag::ChargeNC;
    Tensor out({nc, nc});
    for (const auto& [word, c] : x.terms()) {
        Tensor image = tree_coaction_nc(compose_over(word));
        image *= c;
        out += image;
    }
    return out;
}

Tensor ChargeHopf::coaction(const Element& x) const
{
    if (x.tag() != AlgebraTag::Charge)
        return abelianize_slot(coaction_nc(x), 1);
    Element lifted(AlgebraTag::ChargeNC);
    for (const auto& [word, c] : x.terms()) {
        if (word.size() > 1)
            throw std::invalid_argument(
                "the charge coaction is linear on trees; pass a HalphaNC element for products of generators");
        lifted.add_term(word, c);
    }
    return abelianize_slot(coaction_nc(lifted), 1);
}

const Element& ChargeHopf::generator_antipode(Tree u, bool commutative) const
{
    auto& memo = commutative ? caches_->antipode : caches_->antipode_nc;
    return memo.get(u, [&] {
        const auto tag = commutative ? AlgebraTag::Charge : AlgebraTag::ChargeNC;
        const Element generator = Element::basis(tag, {u});
        const Tensor& full = commutative ? generator_coproduct(u) : generator_coproduct_nc(u);
        // S(V(u)) = -V(u) - sum over the reduced coproduct of S(x1) x2
        Element out = -generator;
        const Tensor reduced = reduced_coproduct(full, generator);
        for (const auto& [key, c] : reduced.terms()) {
            Element s = Element::unit(tag);
            if (commutative) {
                for (Tree v : key[0])
                    s = s * generator_antipode(v, true);
            } else {
                for (auto it = key[0].rbegin(); it != key[0].rend(); ++it)
                    s = s * generator_antipode(*it, false);
            }
            Element term = s * Element::basis(tag, key[1]);
            term *= c;
            out -= term;
        }
        return out;
    });
}

Element ChargeHopf::antipode(const Element& x) const
{
    require_tag(x, AlgebraTag::Charge, "antipode");
    return apply_linear(x, [&](const Word& word) {
        return apply_multiplicative(AlgebraTag::Charge, word,
                                    [&](Tree u) { return generator_antipode(u, true); });
    });
}

Element ChargeHopf::antipode_nc(const Element& x) const
{
    require_tag(x, AlgebraTag::ChargeNC, "antipode_nc");
    return apply_linear(x, [&](const Word& word) {
        Element out = Element::unit(AlgebraTag::ChargeNC);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            out = out * generator_antipode(*it, false);
        return out;
    });
}

Tensor reduced_coproduct(const Tensor& coproduct, const Element& x)
{
    Tensor out = coproduct;
    const Element unit = Element::unit(x.tag());
    out -= tensor({x, unit});
    out -= tensor({unit, x});
    return out;
}

Tensor delta_alpha(const Element& x) { return ChargeHopf::standard().coproduct(x); }
Tensor delta_alpha_nc(const Element& x) { return ChargeHopf::standard().coproduct_nc(x); }
Tensor delta_small(const Element& x) { return ChargeHopf::standard().coaction(x); }
Tensor delta_small_nc(const Element& x) { return ChargeHopf::standard().coaction_nc(x); }
Element antipode_alpha(const Element& x) { return ChargeHopf::standard().antipode(x); }
Element antipode_alpha_nc(const Element& x) { return ChargeHopf::standard().antipode_nc(x); }

} // namespace qedtrees
