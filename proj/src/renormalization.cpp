#include "qedtrees/renormalization.hpp"

#include <stdexcept>

#include "qedtrees/hopf.hpp"
#include "qedtrees/qed.hpp"

namespace qedtrees {

namespace {

bool is_generator(Tree t) { return !t.is_root() && t.left().is_root(); }

} // namespace

Character::Character(AlgebraTag tag, std::map<Tree, RingValue> values, std::size_t dim, std::string label)
    : tag_(tag), values_(std::move(values)), dim_(dim), label_(std::move(label))
{
    if (tag_ == AlgebraTag::ChargeNC)
        throw std::invalid_argument("characters are defined on Hgamma, He or Halpha");
    for (const auto& [t, v] : values_) {
        if (t.is_root())
            throw std::invalid_argument("the unit is not a character key; its value is the identity");
        if (tag_ == AlgebraTag::Charge && !is_generator(t))
            throw std::invalid_argument("Halpha character keys must be generator trees V(u), got " + render(t));
        if (v.dim() != 0 && v.dim() != dim_)
            throw std::invalid_argument("character value of the wrong dimension at " + render(t));
    }
    if (tag_ != AlgebraTag::Charge)
        return;
    bool all_central = true;
    for (const auto& [t, v] : values_)
        all_central = all_central && v.is_scalar_multiple_of_identity();
    if (all_central)
        return;
    for (auto a = values_.begin(); a != values_.end(); ++a)
        for (auto b = std::next(a); b != values_.end(); ++b)
            if (!(a->second * b->second == b->second * a->second))
                throw std::invalid_argument("Halpha character values must commute: " + render(a->first) + " and " +
                                            render(b->first) + " do not");
}

Character Character::zero(AlgebraTag tag, std::size_t dim)
{
    Character chi(tag, {}, dim, "zero");
    chi.zero_default_ = true;
    return chi;
}

RingValue Character::value(Tree key) const
{
    const auto it = values_.find(key);
    if (it != values_.end())
        return it->second;
    if (zero_default_)
        return RingValue::zero(dim_);
    throw std::out_of_range("character has no value at " + render(key));
}

RingValue Character::evaluate_word(const Word& word) const
{
    RingValue out = unit_value();
    for (Tree letter : word)
        out = out * value(tag_ == AlgebraTag::Charge ? v_wrap(letter) : letter);
    return out;
}

RingValue Character::evaluate(const Element& x) const
{
    if (x.tag() != tag_)
        throw std::invalid_argument("character of " + std::string(tag_name(tag_)) + " applied to " +
                                    std::string(tag_name(x.tag())));
    RingValue out = RingValue::zero(dim_);
    for (const auto& [word, c] : x.terms())
        out += RingValue(c) * evaluate_word(word);
    return out;
}

nlohmann::json Character::to_json() const
{
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [t, v] : values_)
        values[render(t)] = qedtrees::to_json(v);
    return {{"tag", std::string(tag_name(tag_))}, {"dim", dim_}, {"label", label_}, {"values", values}};
}

Character Character::from_json(const nlohmann::json& j)
{
    std::map<Tree, RingValue> values;
    for (const auto& [text, v] : j.at("values").items())
        values.emplace(parse_tree(text), ring_value_from_json(v));
    return Character(parse_tag(j.at("tag").get<std::string>()), std::move(values), j.value("dim", std::size_t{0}),
                     j.value("label", std::string{}));
}

RingValue pair_evaluate(const std::vector<const Character*>& characters, const Tensor& t)
{
    if (characters.size() != t.slots())
        throw std::invalid_argument("pair_evaluate needs one character per slot");
    for (std::size_t s = 0; s < t.slots(); ++s)
        if (characters[s]->tag() != t.tags()[s])
            throw std::invalid_argument("character does not match the algebra of its slot");
    RingValue out = characters.empty() ? RingValue(0) : RingValue::zero(characters.front()->dim());
    for (const auto& [key, c] : t.terms()) {
        RingValue term(c);
        for (std::size_t s = 0; s < key.size(); ++s)
            term = term * characters[s]->evaluate_word(key[s]);
        out += term;
    }
    return out;
}

Character make_toy_character(AlgebraTag tag, std::uint64_t seed, Character::Kind kind, std::size_t d,
                             std::uint32_t max_order)
{
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(tag) + 1);
    const std::size_t dim = kind == Character::Kind::Matrix ? d : 0;
    std::map<Tree, RingValue> values;
    if (tag == AlgebraTag::Charge) {
        for (std::uint32_t n = 0; n + 1 <= max_order; ++n)
            for (Tree u : enumerate(n))
                values.emplace(v_wrap(u), RingValue::scalar_identity(random_small_rational(rng), dim));
    } else {
        for (std::uint32_t n = 1; n <= max_order; ++n)
            for (Tree t : enumerate(n))
                values.emplace(t, random_ring_value(rng, dim));
    }
    return Character(tag, std::move(values), dim, "seed " + std::to_string(seed));
}

TruncatedSeries tree_series(const Character& chi, std::size_t n)
{
    if (chi.tag() == AlgebraTag::Charge)
        throw std::invalid_argument("tree_series expects a character of Hgamma or He");
    std::vector<RingValue> coeffs(n + 1, RingValue::zero(chi.dim()));
    coeffs[0] = chi.unit_value();
    for (std::size_t k = 1; k <= n; ++k)
        for (Tree t : enumerate(static_cast<std::uint32_t>(k)))
            coeffs[k] += chi.value(t);
    return TruncatedSeries(n, std::move(coeffs));
}

TruncatedSeries z3_series(const Character& c_gamma, std::size_t n)
{
    if (c_gamma.tag() != AlgebraTag::Charge)
        throw std::invalid_argument("Z3 takes a character of Halpha");
    std::vector<RingValue> coeffs(n + 1, RingValue::zero(c_gamma.dim()));
    coeffs[0] = c_gamma.unit_value();
    for (std::size_t k = 1; k <= n; ++k)
        for (Tree t : enumerate(static_cast<std::uint32_t>(k - 1)))
            coeffs[k] -= c_gamma.value(v_wrap(t));
    return TruncatedSeries(n, std::move(coeffs));
}

TruncatedSeries z2_inverse_series(const Character& c_e, std::size_t n)
{
    if (c_e.tag() != AlgebraTag::Electron)
        throw std::invalid_argument("Z2 takes a character of He");
    std::vector<RingValue> coeffs(n + 1, RingValue::zero(c_e.dim()));
    coeffs[0] = c_e.unit_value();
    for (std::size_t k = 1; k <= n; ++k)
        for (Tree t : enumerate(static_cast<std::uint32_t>(k)))
            coeffs[k] += c_e.evaluate(pruning_antipode_tree(AlgebraTag::Electron, t));
    return TruncatedSeries(n, std::move(coeffs));
}

TruncatedSeries z2_series(const Character& c_e, std::size_t n) { return series_inverse(z2_inverse_series(c_e, n)); }

TruncatedSeries ward_alpha0(const TruncatedSeries& z3, std::size_t n)
{
    const auto z = z3.truncated(std::min(n, z3.order()));
    return TruncatedSeries::variable(z.order()) * series_inverse(z);
}

const RenormalizationMaps& RenormalizationMaps::standard()
{
    static const RenormalizationMaps maps{[](const Element& x) { return photon_renorm_coaction(x); },
                                          [](const Element& x) { return electron_renorm_coaction(x); },
                                          qedtrees::antipode_p_e};
    return maps;
}

RingValue renormalized_photon(const Character& u, const Character& c_gamma, Tree t, const RenormalizationMaps& maps)
{
    const Tensor split = maps.photon_coaction(embed_tree(AlgebraTag::Photon, t));
    return pair_evaluate({&u, &c_gamma}, split);
}

RingValue renormalized_electron(const Character& u, const Character& c_gamma, const Character& c_e, Tree t,
                                const RenormalizationMaps& maps)
{
    const Tensor split = maps.electron_coaction(embed_tree(AlgebraTag::Electron, t));
    RingValue out = RingValue::zero(u.dim());
    for (const auto& [key, c] : split.terms()) {
        const Element s3 = maps.antipode_p_e(Element::basis(AlgebraTag::Electron, key[2]));
        out += RingValue(c) * u.evaluate_word(key[0]) * c_gamma.evaluate_word(key[1]) * c_e.evaluate(s3);
    }
    return out;
}

nlohmann::json DysonReport::to_json() const
{
    nlohmann::json residual_json = nlohmann::json::array();
    for (const auto& r : residuals)
        residual_json.push_back(qedtrees::to_json(r));
    nlohmann::json out = {{"equation", equation},
                          {"order", order},
                          {"per_order_residuals", residual_json},
                          {"status", passed ? "pass" : "fail"}};
    out["first_failing_order"] = first_failing_order ? nlohmann::json(*first_failing_order) : nlohmann::json();
    return out;
}

namespace {

DysonReport compare(std::string equation, const TruncatedSeries& lhs, const TruncatedSeries& rhs, std::size_t n)
{
    DysonReport report;
    report.equation = std::move(equation);
    report.order = n;
    const auto diff = lhs - rhs;
    for (std::size_t k = 0; k <= n; ++k) {
        report.residuals.push_back(diff[k]);
        if (!diff[k].is_zero() && !report.first_failing_order) {
            report.first_failing_order = k;
            report.passed = false;
        }
    }
    return report;
}

TruncatedSeries renormalized_series(std::size_t n, std::size_t dim, const std::function<RingValue(Tree)>& r)
{
    std::vector<RingValue> coeffs(n + 1, RingValue::zero(dim));
    for (std::size_t k = 0; k <= n; ++k)
        for (Tree t : enumerate(static_cast<std::uint32_t>(k)))
            coeffs[k] += r(t);
    return TruncatedSeries(n, std::move(coeffs));
}

} // namespace

DysonReport dyson_check_photon(const Character& u, const Character& c_gamma, std::size_t n,
                               const RenormalizationMaps& maps)
{
    const auto z3 = z3_series(c_gamma, n);
    const auto alpha0 = ward_alpha0(z3, n);
    const auto d_bare = gp_action(tree_series(u, n), alpha0);
    const auto d_ren =
        renormalized_series(n, u.dim(), [&](Tree t) { return renormalized_photon(u, c_gamma, t, maps); });
    return compare("Dbar(a) Z3(a) = D(a0(a))", d_ren * z3, d_bare, n);
}

DysonReport dyson_check_electron(const Character& u, const Character& c_gamma, const Character& c_e, std::size_t n,
                                 const RenormalizationMaps& maps)
{
    const auto alpha0 = ward_alpha0(z3_series(c_gamma, n), n);
    const auto s_bare = gp_action(tree_series(u, n), alpha0);
    const auto s_ren =
        renormalized_series(n, u.dim(), [&](Tree t) { return renormalized_electron(u, c_gamma, c_e, t, maps); });
    return compare("Sbar(a) Z2(a) = S(a0(a))", s_ren * z2_series(c_e, n), s_bare, n);
}

} // namespace qedtrees
