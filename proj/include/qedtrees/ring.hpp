#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qedtrees/scalar.hpp"

namespace qedtrees {

/// An exact rational scalar or a d x d rational matrix. A scalar acts as
/// that multiple of the identity when combined with a matrix.
class RingValue {
public:
    RingValue() : RingValue(Rational(0)) {}
    RingValue(const Rational& q) : entries_{q} {}
    RingValue(int q) : entries_{Rational(q)} {}

    static RingValue matrix(std::size_t d, std::vector<Rational> row_major);
    static RingValue identity(std::size_t d);
    static RingValue zero(std::size_t d);
    /// c times the d x d identity, or the scalar c when d == 0.
    static RingValue scalar_identity(const Rational& c, std::size_t d);

    bool is_scalar() const { return dim_ == 0; }
    /// 0 for scalars.
    std::size_t dim() const { return dim_; }
    const Rational& scalar() const;
    const Rational& at(std::size_t i, std::size_t j) const;

    bool is_zero() const;
    bool is_one() const;
    /// True for scalars and for c * I.
    bool is_scalar_multiple_of_identity() const;

    /// Throws std::domain_error when not invertible.
    RingValue inverse() const;

    RingValue& operator+=(const RingValue& other);
    RingValue& operator-=(const RingValue& other);
    friend RingValue operator+(RingValue a, const RingValue& b) { return a += b; }
    friend RingValue operator-(RingValue a, const RingValue& b) { return a -= b; }
    friend RingValue operator-(const RingValue& a);
    friend RingValue operator*(const RingValue& a, const RingValue& b);
    RingValue& operator*=(const RingValue& other) { return *this = *this * other; }

    /// Value equality with scalar promotion: c == c * I.
    friend bool operator==(const RingValue& a, const RingValue& b);

private:
    RingValue(std::size_t d, std::vector<Rational> entries) : dim_(d), entries_(std::move(entries)) {}
    RingValue promoted(std::size_t d) const;

    std::size_t dim_ = 0;
    std::vector<Rational> entries_;
};

std::string to_string(const RingValue& v);

/// A scalar as "p/q", a matrix as an array of rows.
nlohmann::json to_json(const RingValue& v);
RingValue ring_value_from_json(const nlohmann::json& j);

/// Small rational with numerator in [-limit, limit] and denominator in [1, 3].
Rational random_small_rational(std::mt19937_64& rng, int limit = 3);
RingValue random_ring_value(std::mt19937_64& rng, std::size_t d, int limit = 3);

} // namespace qedtrees
