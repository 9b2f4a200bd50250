#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "qedtrees/algebra.hpp"

namespace qedtrees {

// ------------------------------------------------------------ pruning Hopf algebras
//
// Photon: Delta^p_gamma, dual to the over product. Electron: Delta^p_e, dual
// to the under product. Both are free algebras on trees with the coproduct
// extended multiplicatively.

/// Pruning coproduct of a single tree via the grafting recursion. `tag`
/// selects the pruning (Photon = over, Electron = under).
const Tensor& pruning_coproduct_tree(AlgebraTag tag, Tree t);

/// Same coproduct computed as the sum over all factorizations in the free
/// monoid (Y, /) or (Y, \). Independent of the recursion; used as a cross-check.
Tensor pruning_coproduct_factorized(AlgebraTag tag, Tree t);

Tensor delta_p_gamma(const Element& x);
Tensor delta_p_e(const Element& x);

/// Multiplicative extension on words of either pruning coproduct.
Tensor pruning_coproduct(const Element& x);

/// P(t) = Delta^p_e(t) - t(x)1 - 1(x)t. Requires t != e.
Tensor reduced_pruning(Tree t);
/// Reduced coproduct for either pruning.
Tensor reduced_pruning(AlgebraTag tag, Tree t);

/// Antipode of the pruning Hopf algebra on a tree, from
/// S(t) = -t - sum_{P(t)} S(t1) t2.
const Element& pruning_antipode_tree(AlgebraTag tag, Tree t);

/// Anti-multiplicative extension.
Element pruning_antipode(const Element& x);
Element antipode_p_e(const Element& x);
Element antipode_p_gamma(const Element& x);

// ------------------------------------------------------------ charge Hopf algebra

/// Charge coproduct Delta^alpha, coaction delta and antipode S^gamma, with
/// the noncommutative lifts.
///
/// Everything is computed from the lift on ChargeNC = (CY, /), where the
/// recursions act on genuine trees:
///   Delta(V(u)) = 1 (x) V(u) + delta(V(u)),  delta(V(u)) = (V (x) Id) delta(u),
///   delta(t v s) = Delta(t) / delta(V(s)),   delta(e) = e (x) e.
/// The commutative maps are the images under abelianization. The coaction
/// is linear on trees (it is not multiplicative), so its input and its left
/// output slot are ChargeNC (tree basis) while the right slot lives in Charge.
///
/// Generator values are memoized per instance. A hook may rewrite each
/// generator coproduct after it is computed; it exists to build deliberately
/// broken structures for negative controls.
class ChargeHopf {
public:
    using GeneratorHook = std::function<void(Tree generator_arg, Tensor& coproduct)>;

    ChargeHopf();
    explicit ChargeHopf(GeneratorHook hook);
    ~ChargeHopf();
    ChargeHopf(const ChargeHopf&) = delete;
    ChargeHopf& operator=(const ChargeHopf&) = delete;

    static const ChargeHopf& standard();

    /// Delta~(V(u)) in ChargeNC (x) ChargeNC.
    const Tensor& generator_coproduct_nc(Tree u) const;
    /// Delta(V(u)) in Charge (x) Charge.
    const Tensor& generator_coproduct(Tree u) const;
    /// delta~(t) for a single tree, ChargeNC (x) ChargeNC.
    const Tensor& tree_coaction_nc(Tree t) const;

    Tensor coproduct_nc(const Element& x) const;
    Tensor coproduct(const Element& x) const;

    /// Input ChargeNC (trees), or Charge restricted to the unit and single generators.
    Tensor coaction(const Element& x) const;
    Tensor coaction_nc(const Element& x) const;

    Element antipode(const Element& x) const;
    Element antipode_nc(const Element& x) const;

private:
    struct Caches;
    std::unique_ptr<Caches> caches_;
    GeneratorHook hook_;

    const Element& generator_antipode(Tree u, bool commutative) const;
};

Tensor delta_alpha(const Element& x);
Tensor delta_alpha_nc(const Element& x);
Tensor delta_small(const Element& x);
Tensor delta_small_nc(const Element& x);
Element antipode_alpha(const Element& x);
Element antipode_alpha_nc(const Element& x);

/// Delta(x) - x(x)1 - 1(x)x for a homogeneous generator-level element.
Tensor reduced_coproduct(const Tensor& coproduct, const Element& x);

} // namespace qedtrees
