#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include <json.hpp>

#include "qedtrees/ring.hpp"

namespace qedtrees {

/// c_0 + c_1 a + ... + c_N a^N, everything above a^N discarded. Binary
/// operations on series of different truncation orders truncate to the
/// smaller one.
class TruncatedSeries {
public:
    TruncatedSeries() : TruncatedSeries(0, {}) {}
    /// Missing coefficients are zero; coefficients above N are dropped.
    TruncatedSeries(std::size_t n, std::vector<RingValue> coeffs);

    static TruncatedSeries constant(std::size_t n, const RingValue& c);
    /// 1 (or the d x d identity).
    static TruncatedSeries one(std::size_t n, std::size_t d = 0);
    /// The variable a (times the identity).
    static TruncatedSeries variable(std::size_t n, std::size_t d = 0);

    std::size_t order() const { return coeffs_.size() - 1; }
    const RingValue& operator[](std::size_t k) const { return coeffs_.at(k); }
    const std::vector<RingValue>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t n) const;

    /// Constant term invertible.
    bool is_gp() const;
    /// Zero constant term, invertible linear term.
    bool is_gc() const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    /// Cauchy product, coefficient order preserved.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const RingValue& c, const TruncatedSeries& a);

    /// Coefficientwise up to the smaller truncation order.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<RingValue> coeffs_;
};

/// Pointwise product in G^p.
TruncatedSeries gp_multiply(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplicative inverse; requires an invertible constant term.
TruncatedSeries series_inverse(const TruncatedSeries& f);

/// phi(psi(a)) = sum_k phi_k psi(a)^k. This is the product phi psi of G^c,
/// chosen so that f^(phi psi) = (f^phi)^psi.
TruncatedSeries gc_compose(const TruncatedSeries& phi, const TruncatedSeries& psi);

/// Compositional inverse in G^c.
TruncatedSeries gc_inverse(const TruncatedSeries& phi);

/// f^phi = f(phi(a)).
TruncatedSeries gp_action(const TruncatedSeries& f, const TruncatedSeries& phi);

/// f / a for a series with zero constant term; the truncation order drops by one.
TruncatedSeries divide_by_variable(const TruncatedSeries& f);

struct SemidirectPair {
    TruncatedSeries phi;
    TruncatedSeries f;

    friend bool operator==(const SemidirectPair& a, const SemidirectPair& b) = default;
};

SemidirectPair semidirect_identity(std::size_t n, std::size_t d = 0);

/// (phi, f)(psi, g) = (phi psi, f^psi g).
SemidirectPair semidirect_multiply(const SemidirectPair& a, const SemidirectPair& b);

SemidirectPair semidirect_inverse(const SemidirectPair& a);

using Cocycle = std::function<TruncatedSeries(const TruncatedSeries&)>;

/// s(phi) = phi / a.
TruncatedSeries divide_by_alpha_cocycle(const TruncatedSeries& phi);

/// s(psi) [s(phi psi)]^-1 [s(phi)^psi]; equals 1 iff s satisfies the cocycle identity at (phi, psi).
TruncatedSeries cocycle_defect(const Cocycle& s, const TruncatedSeries& phi, const TruncatedSeries& psi);
bool cocycle_check(const Cocycle& s, const TruncatedSeries& phi, const TruncatedSeries& psi);

/// f ._s phi = f^phi s(phi).
TruncatedSeries sigma_action(const TruncatedSeries& f, const TruncatedSeries& phi, const Cocycle& s);

/// Random element of G^p with small rational coefficients (d == 0 for scalars).
TruncatedSeries random_gp(std::mt19937_64& rng, std::size_t n, std::size_t d = 0);
/// Random element of G^c; with `scalar_coefficients` every coefficient is c * I.
TruncatedSeries random_gc(std::mt19937_64& rng, std::size_t n, std::size_t d = 0, bool scalar_coefficients = false);

nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

} // namespace qedtrees
