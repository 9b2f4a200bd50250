#include "qedtrees/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qedtrees {

TruncatedSeries::TruncatedSeries(std::size_t n, std::vector<RingValue> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(n + 1);
}

TruncatedSeries TruncatedSeries::constant(std::size_t n, const RingValue& c) { return TruncatedSeries(n, {c}); }

TruncatedSeries TruncatedSeries::one(std::size_t n, std::size_t d)
{
    return constant(n, RingValue::identity(d));
}

TruncatedSeries TruncatedSeries::variable(std::size_t n, std::size_t d)
{
    return TruncatedSeries(n, {RingValue::zero(d), RingValue::identity(d)});
}

TruncatedSeries TruncatedSeries::truncated(std::size_t n) const
{
    return TruncatedSeries(n, std::vector<RingValue>(coeffs_.begin(), coeffs_.begin() + std::min(n + 1, coeffs_.size())));
}

namespace {

bool invertible(const RingValue& v)
{
    try {
        (void)v.inverse();
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

} // namespace

bool TruncatedSeries::is_gp() const { return invertible(coeffs_[0]); }

bool TruncatedSeries::is_gc() const { return coeffs_[0].is_zero() && order() >= 1 && invertible(coeffs_[1]); }

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other)
{
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto n = std::min(a.order(), b.order());
    std::vector<RingValue> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(n, std::move(out));
}

TruncatedSeries operator*(const RingValue& c, const TruncatedSeries& a)
{
    TruncatedSeries out = a;
    for (auto& x : out.coeffs_)
        x = c * x;
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= n; ++k)
        if (!(a.coeffs_[k] == b.coeffs_[k]))
            return false;
    return true;
}

TruncatedSeries gp_multiply(const TruncatedSeries& f, const TruncatedSeries& g) { return f * g; }

TruncatedSeries series_inverse(const TruncatedSeries& f)
{
    const auto n = f.order();
    const RingValue c0_inv = f[0].inverse();
    // g_k = -c0^-1 sum_{j<k} f_{k-j} g_j, a right inverse, hence two-sided.
    std::vector<RingValue> g(n + 1);
    g[0] = c0_inv;
    for (std::size_t k = 1; k <= n; ++k) {
        RingValue acc;
        for (std::size_t j = 0; j < k; ++j)
            acc += f[k - j] * g[j];
        g[k] = -(c0_inv * acc);
    }
    return TruncatedSeries(n, std::move(g));
}

TruncatedSeries gc_compose(const TruncatedSeries& phi, const TruncatedSeries& psi)
{
    if (!psi[0].is_zero())
        throw std::invalid_argument("substituted series must have zero constant term");
    const auto n = std::min(phi.order(), psi.order());
    TruncatedSeries out = TruncatedSeries::constant(n, phi[0]);
    TruncatedSeries power = TruncatedSeries::one(n);
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * psi;
        out += phi[k] * power;
    }
    return out;
}

TruncatedSeries gp_action(const TruncatedSeries& f, const TruncatedSeries& phi) { return gc_compose(f, phi); }

TruncatedSeries gc_inverse(const TruncatedSeries& phi)
{
    if (!phi.is_gc())
        throw std::domain_error("compositional inverse needs zero constant term and invertible linear term");
    const auto n = phi.order();
    const RingValue lead_inv = phi[1].inverse();
    std::vector<RingValue> psi(n + 1);
    psi[0] = phi[0] * RingValue(0);
    psi[1] = lead_inv;
    // The a^k coefficient of phi(psi) is phi_1 psi_k plus terms in psi_1..psi_{k-1}.
    for (std::size_t k = 2; k <= n; ++k) {
        psi[k] = psi[1] * RingValue(0);
        const auto partial = gc_compose(phi.truncated(k), TruncatedSeries(k, psi));
        psi[k] = -(lead_inv * partial[k]);
    }
    return TruncatedSeries(n, std::move(psi));
}

TruncatedSeries divide_by_variable(const TruncatedSeries& f)
{
    if (!f[0].is_zero())
        throw std::domain_error("division by the variable needs a zero constant term");
    if (f.order() == 0)
        throw std::domain_error("nothing left after division by the variable");
    return TruncatedSeries(f.order() - 1, std::vector<RingValue>(f.coeffs().begin() + 1, f.coeffs().end()));
}

SemidirectPair semidirect_identity(std::size_t n, std::size_t d)
{
    return {TruncatedSeries::variable(n, d), TruncatedSeries::one(n, d)};
}

SemidirectPair semidirect_multiply(const SemidirectPair& a, const SemidirectPair& b)
{
    return {gc_compose(a.phi, b.phi), gp_action(a.f, b.phi) * b.f};
}

SemidirectPair semidirect_inverse(const SemidirectPair& a)
{
    // (phi, f)^-1 = (phi^-1, (f^(phi^-1))^-1)
    const auto inv = gc_inverse(a.phi);
    return {inv, series_inverse(gp_action(a.f, inv))};
}

TruncatedSeries divide_by_alpha_cocycle(const TruncatedSeries& phi) { return divide_by_variable(phi); }

TruncatedSeries cocycle_defect(const Cocycle& s, const TruncatedSeries& phi, const TruncatedSeries& psi)
{
    return s(psi) * series_inverse(s(gc_compose(phi, psi))) * gp_action(s(phi), psi);
}

bool cocycle_check(const Cocycle& s, const TruncatedSeries& phi, const TruncatedSeries& psi)
{
    const auto defect = cocycle_defect(s, phi, psi);
    return defect == TruncatedSeries::one(defect.order());
}

TruncatedSeries sigma_action(const TruncatedSeries& f, const TruncatedSeries& phi, const Cocycle& s)
{
    return gp_action(f, phi) * s(phi);
}

TruncatedSeries random_gp(std::mt19937_64& rng, std::size_t n, std::size_t d)
{
    std::vector<RingValue> c(n + 1);
    do
        c[0] = random_ring_value(rng, d);
    while (!invertible(c[0]));
    for (std::size_t k = 1; k <= n; ++k)
        c[k] = random_ring_value(rng, d);
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries random_gc(std::mt19937_64& rng, std::size_t n, std::size_t d, bool scalar_coefficients)
{
    auto draw = [&] {
        return scalar_coefficients ? RingValue::scalar_identity(random_small_rational(rng), d) : random_ring_value(rng, d);
    };
    std::vector<RingValue> c(n + 1);
    c[0] = RingValue::zero(d);
    do
        c[1] = draw();
    while (!invertible(c[1]));
    for (std::size_t k = 2; k <= n; ++k)
        c[k] = draw();
    return TruncatedSeries(n, std::move(c));
}

nlohmann::json to_json(const TruncatedSeries& s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_json(c));
    return {{"N", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const nlohmann::json& j)
{
    const auto n = j.at("N").get<std::size_t>();
    std::vector<RingValue> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(ring_value_from_json(c));
    if (coeffs.size() > n + 1)
        throw std::invalid_argument("series has more coefficients than its truncation order allows");
    return TruncatedSeries(n, std::move(coeffs));
}

} // namespace qedtrees
