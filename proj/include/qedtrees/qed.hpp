#pragma once

#include <functional>
#include <vector>

#include "qedtrees/hopf.hpp"

namespace qedtrees {

using LinearMap = std::function<Tensor(const Element&)>;
using ElementMap = std::function<Element(const Element&)>;

// ------------------------------------------------------------ coactions delta^gamma, delta^e

/// delta~ on a single tree, read in `tag` (Photon or Electron) (x) Charge.
Tensor tree_coaction(AlgebraTag tag, Tree t, const ChargeHopf& charge = ChargeHopf::standard());

/// The same value from the recursion
///   delta(t v s) = sum t(1) v s(p) (x) t(2) / s(alpha),
/// with t(1) (x) t(2) running over the noncommutative charge coproduct of t.
Tensor tree_coaction_recursive(AlgebraTag tag, Tree t, const ChargeHopf& charge = ChargeHopf::standard());

/// Multiplicative extensions: Hgamma -> Hgamma (x) Halpha and He -> He (x) Halpha.
Tensor delta_gamma_coaction(const Element& x, const ChargeHopf& charge = ChargeHopf::standard());
Tensor delta_e_coaction(const Element& x, const ChargeHopf& charge = ChargeHopf::standard());

// ------------------------------------------------------------ sigma and the photon coaction

/// sigma(t1...tn) = t1 / ... / tn in Halpha.
Element sigma(const Element& x);

/// m_23 (delta (x) sigma) Delta^p : P -> P (x) C for any coproduct, coaction and sigma.
Tensor delta_sigma(const Element& x, const LinearMap& coproduct_p, const LinearMap& coaction, const ElementMap& sigma_map);

/// Delta^gamma = m_23 (delta^gamma (x) sigma) Delta^p_gamma.
Tensor photon_renorm_coaction(const Element& x, const ChargeHopf& charge = ChargeHopf::standard());

// ------------------------------------------------------------ electron coaction

/// Delta^e = (delta^e (x) Id) Delta^p_e : He -> He (x) Halpha (x) He.
Tensor electron_renorm_coaction(const Element& x, const ChargeHopf& charge = ChargeHopf::standard());

/// Delta^e from its own recursion on trees, extended multiplicatively.
Tensor electron_renorm_coaction_recursive(const Element& x, const ChargeHopf& charge = ChargeHopf::standard());

// ------------------------------------------------------------ semidirect coproducts

/// H^c (x) H^p with the smash coproduct
///   Delta(a (x) b) = Delta^c(a) [(delta (x) Id) Delta^p(b)],
/// elements being two-slot tensors (c, p) and coproducts four-slot tensors (c, p, c, p).
struct Semidirect {
    AlgebraTag c_tag = AlgebraTag::Charge;
    AlgebraTag p_tag = AlgebraTag::Electron;
    LinearMap coproduct_c;
    LinearMap coproduct_p;
    LinearMap coaction;
    ElementMap antipode_c;
    ElementMap antipode_p;

    std::vector<AlgebraTag> tags() const { return {c_tag, p_tag}; }

    Tensor coproduct(const Tensor& x) const;
    Rational counit(const Tensor& x) const;
    /// S(a (x) b) = S^c(a) [tau (Id (x) S^c) delta(S^p b)]. Requires H^c commutative.
    Tensor antipode(const Tensor& x) const;
    /// (delta (x) Id) Delta^p : P -> P (x) (C (x) P), three slots (p, c, p).
    Tensor right_coaction(const Element& b) const;
};

Semidirect qed_semidirect(const ChargeHopf& charge = ChargeHopf::standard());
Semidirect photon_semidirect(const ChargeHopf& charge = ChargeHopf::standard());

/// a (x) b as an element of H^qed.
Tensor qed_element(const Element& a, const Element& b);

Tensor qed_coproduct(const Tensor& x);
Tensor qed_antipode(const Tensor& x);

} // namespace qedtrees
