#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qedtrees/algebra.hpp"
#include "qedtrees/qed.hpp"
#include "qedtrees/series.hpp"

namespace qedtrees {

/// Algebra morphism from Hgamma, He or Halpha into scalars or d x d matrices,
/// given by its values on single trees (Photon/Electron) or on the
/// generator trees V(u) (Charge). Words evaluate left to right.
class Character {
public:
    enum class Kind { Scalar, Matrix };

    /// `dim` is 0 for scalar targets. Charge characters must have pairwise
    /// commuting values; keys must then be generator trees V(u).
    Character(AlgebraTag tag, std::map<Tree, RingValue> values, std::size_t dim = 0, std::string label = {});

    /// The zero-counterterm character: 0 on every tree, 1 on the unit.
    static Character zero(AlgebraTag tag, std::size_t dim = 0);

    AlgebraTag tag() const { return tag_; }
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const std::map<Tree, RingValue>& values() const { return values_; }

    /// Value on one key tree; missing keys are zero for characters built by
    /// zero(), otherwise std::out_of_range.
    RingValue value(Tree key) const;

    RingValue unit_value() const { return RingValue::identity(dim_); }
    RingValue evaluate_word(const Word& word) const;
    RingValue evaluate(const Element& x) const;

    nlohmann::json to_json() const;
    static Character from_json(const nlohmann::json& j);

private:
    AlgebraTag tag_;
    std::map<Tree, RingValue> values_;
    std::size_t dim_;
    std::string label_;
    bool zero_default_ = false;
};

/// sum c * chi_1(w_1) chi_2(w_2) ... over the terms of T, slot values
/// multiplied left to right.
RingValue pair_evaluate(const std::vector<const Character*>& characters, const Tensor& t);

/// Toy character with small rational values on every tree of order <= max_order
/// (generators of degree <= max_order for Charge). Matrix kind on Charge
/// gives values c * I so that the values commute.
Character make_toy_character(AlgebraTag tag, std::uint64_t seed, Character::Kind kind, std::size_t d,
                             std::uint32_t max_order);

/// sum_t chi(t) a^|t| over single trees of order <= n.
TruncatedSeries tree_series(const Character& chi, std::size_t n);

/// Z3 = 1 - sum_t Cgamma(V(t)) a^(|t|+1).
TruncatedSeries z3_series(const Character& c_gamma, std::size_t n);

/// 1 + sum_{t != e} Ce(S^p_e t) a^|t|, the expansion that represents Z2^-1.
TruncatedSeries z2_inverse_series(const Character& c_e, std::size_t n);

/// Z2, the inverse of z2_inverse_series; equals 1 + sum_{t != e} Ce(t) a^|t|.
TruncatedSeries z2_series(const Character& c_e, std::size_t n);

/// a0(a) = a Z3(a)^-1.
TruncatedSeries ward_alpha0(const TruncatedSeries& z3, std::size_t n);

/// The structure maps the renormalization formulas are built from.
struct RenormalizationMaps {
    LinearMap photon_coaction;
    LinearMap electron_coaction;
    ElementMap antipode_p_e;

    static const RenormalizationMaps& standard();
};

/// R^gamma(t) = sum over Delta^gamma(t) of U(t1) Cgamma(t2).
RingValue renormalized_photon(const Character& u, const Character& c_gamma, Tree t,
                              const RenormalizationMaps& maps = RenormalizationMaps::standard());

/// R^e(t) = sum over Delta^e(t) of U(t1) Cgamma(t2) Ce(S^p_e t3).
RingValue renormalized_electron(const Character& u, const Character& c_gamma, const Character& c_e, Tree t,
                                const RenormalizationMaps& maps = RenormalizationMaps::standard());

struct DysonReport {
    std::string equation;
    std::size_t order = 0;
    /// lhs - rhs, one entry per power of a.
    std::vector<RingValue> residuals;
    bool passed = true;
    std::optional<std::size_t> first_failing_order;

    nlohmann::json to_json() const;
};

/// Dbar(a) Z3(a) = D(a0(a)) order by order.
DysonReport dyson_check_photon(const Character& u, const Character& c_gamma, std::size_t n,
                               const RenormalizationMaps& maps = RenormalizationMaps::standard());

/// Sbar(a) Z2(a) = S(a0(a)) order by order, with the same a0.
DysonReport dyson_check_electron(const Character& u, const Character& c_gamma, const Character& c_e, std::size_t n,
                                 const RenormalizationMaps& maps = RenormalizationMaps::standard());

} // namespace qedtrees
