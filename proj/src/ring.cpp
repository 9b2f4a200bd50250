#include "qedtrees/ring.hpp"

#include <stdexcept>
#include <utility>

namespace qedtrees {

RingValue RingValue::matrix(std::size_t d, std::vector<Rational> row_major)
{
    if (d == 0)
        throw std::invalid_argument("matrix dimension must be positive");
    if (row_major.size() != d * d)
        throw std::invalid_argument("matrix needs d*d entries");
    return RingValue(d, std::move(row_major));
}

RingValue RingValue::identity(std::size_t d) { return scalar_identity(1, d); }

RingValue RingValue::zero(std::size_t d) { return scalar_identity(0, d); }

RingValue RingValue::scalar_identity(const Rational& c, std::size_t d)
{
    if (d == 0)
        return RingValue(c);
    std::vector<Rational> entries(d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        entries[i * d + i] = c;
    return RingValue(d, std::move(entries));
}

const Rational& RingValue::scalar() const
{
    if (!is_scalar())
        throw std::logic_error("ring value is a matrix");
    return entries_[0];
}

const Rational& RingValue::at(std::size_t i, std::size_t j) const
{
    if (is_scalar())
        throw std::logic_error("ring value is a scalar");
    return entries_.at(i * dim_ + j);
}

bool RingValue::is_zero() const
{
    for (const auto& q : entries_)
        if (sgn(q) != 0)
            return false;
    return true;
}

bool RingValue::is_one() const { return is_scalar_multiple_of_identity() && entries_[0] == 1; }

bool RingValue::is_scalar_multiple_of_identity() const
{
    if (is_scalar())
        return true;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const auto& q = entries_[i * dim_ + j];
            if (i == j ? q != entries_[0] : sgn(q) != 0)
                return false;
        }
    return true;
}

RingValue RingValue::promoted(std::size_t d) const
{
    if (!is_scalar() || d == 0)
        return *this;
    return scalar_identity(entries_[0], d);
}

namespace {

std::size_t common_dim(const RingValue& a, const RingValue& b)
{
    if (!a.is_scalar() && !b.is_scalar() && a.dim() != b.dim())
        throw std::invalid_argument("matrix dimensions differ");
    return a.is_scalar() ? b.dim() : a.dim();
}

} // namespace

RingValue& RingValue::operator+=(const RingValue& other)
{
    const auto d = common_dim(*this, other);
    *this = promoted(d);
    const RingValue rhs = other.promoted(d);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += rhs.entries_[k];
    return *this;
}

RingValue& RingValue::operator-=(const RingValue& other)
{
    const auto d = common_dim(*this, other);
    *this = promoted(d);
    const RingValue rhs = other.promoted(d);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] -= rhs.entries_[k];
    return *this;
}

RingValue operator-(const RingValue& a)
{
    RingValue out = a;
    for (auto& q : out.entries_)
        q = -q;
    return out;
}

RingValue operator*(const RingValue& a, const RingValue& b)
{
    if (a.is_scalar() || b.is_scalar()) {
        const auto& s = a.is_scalar() ? a.entries_[0] : b.entries_[0];
        RingValue out = a.is_scalar() ? b : a;
        for (auto& q : out.entries_)
            q *= s;
        return out;
    }
    const auto d = common_dim(a, b);
    std::vector<Rational> entries(d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const auto& aik = a.entries_[i * d + k];
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < d; ++j)
                entries[i * d + j] += aik * b.entries_[k * d + j];
        }
    return RingValue(d, std::move(entries));
}

bool operator==(const RingValue& a, const RingValue& b)
{
    const auto d = common_dim(a, b);
    return a.promoted(d).entries_ == b.promoted(d).entries_;
}

RingValue RingValue::inverse() const
{
    if (is_scalar()) {
        if (sgn(entries_[0]) == 0)
            throw std::domain_error("zero is not invertible");
        return RingValue(Rational(1) / entries_[0]);
    }
    const auto d = dim_;
    std::vector<Rational> m = entries_;
    std::vector<Rational> inv = scalar_identity(1, d).entries_;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && sgn(m[pivot * d + col]) == 0)
            ++pivot;
        if (pivot == d)
            throw std::domain_error("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < d; ++j) {
                std::swap(m[pivot * d + j], m[col * d + j]);
                std::swap(inv[pivot * d + j], inv[col * d + j]);
            }
        const Rational p = m[col * d + col];
        for (std::size_t j = 0; j < d; ++j) {
            m[col * d + j] /= p;
            inv[col * d + j] /= p;
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (i == col || sgn(m[i * d + col]) == 0)
                continue;
            const Rational f = m[i * d + col];
            for (std::size_t j = 0; j < d; ++j) {
                m[i * d + j] -= f * m[col * d + j];
                inv[i * d + j] -= f * inv[col * d + j];
            }
        }
    }
    return RingValue(d, std::move(inv));
}

std::string to_string(const RingValue& v)
{
    if (v.is_scalar())
        return to_string(v.scalar());
    std::string out = "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        out += i ? "; " : "";
        for (std::size_t j = 0; j < v.dim(); ++j)
            out += (j ? " " : "") + to_string(v.at(i, j));
    }
    return out + "]";
}

nlohmann::json to_json(const RingValue& v)
{
    if (v.is_scalar())
        return to_string(v.scalar());
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < v.dim(); ++j)
            row.push_back(to_string(v.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

RingValue ring_value_from_json(const nlohmann::json& j)
{
    auto entry = [](const nlohmann::json& e) {
        if (e.is_string())
            return parse_rational(e.get<std::string>());
        if (e.is_number_integer())
            return Rational(e.get<long>());
        throw std::invalid_argument("ring entries must be \"p/q\" strings or integers");
    };
    if (!j.is_array())
        return RingValue(entry(j));
    const auto d = j.size();
    std::vector<Rational> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != d)
            throw std::invalid_argument("matrix must be a square array of rows");
        for (const auto& e : row)
            entries.push_back(entry(e));
    }
    return RingValue::matrix(d, std::move(entries));
}

Rational random_small_rational(std::mt19937_64& rng, int limit)
{
    const auto span = static_cast<std::uint64_t>(2 * limit + 1);
    const long num = static_cast<long>(rng() % span) - limit;
    const long den = static_cast<long>(rng() % 3) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RingValue random_ring_value(std::mt19937_64& rng, std::size_t d, int limit)
{
    if (d == 0)
        return random_small_rational(rng, limit);
    std::vector<Rational> entries;
    for (std::size_t k = 0; k < d * d; ++k)
        entries.push_back(random_small_rational(rng, limit));
    return RingValue::matrix(d, std::move(entries));
}

} // namespace qedtrees
