#include "qedtrees/algebra.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace qedtrees {

std::string_view tag_name(AlgebraTag tag)
{
    switch (tag) {
    case AlgebraTag::Photon:
        return "Hgamma";
    case AlgebraTag::Electron:
        return "He";
    case AlgebraTag::Charge:
        return "Halpha";
    case AlgebraTag::ChargeNC:
        return "HalphaNC";
    }
    return "?";
}

AlgebraTag parse_tag(std::string_view name)
{
    for (auto tag : {AlgebraTag::Photon, AlgebraTag::Electron, AlgebraTag::Charge, AlgebraTag::ChargeNC})
        if (tag_name(tag) == name)
            return tag;
    throw std::invalid_argument("unknown algebra tag: " + std::string(name));
}

Word normalize_word(AlgebraTag tag, Word word)
{
    switch (tag) {
    case AlgebraTag::Photon:
    case AlgebraTag::Electron:
        std::erase_if(word, [](Tree t) { return t.is_root(); });
        break;
    case AlgebraTag::Charge:
        std::sort(word.begin(), word.end());
        break;
    case AlgebraTag::ChargeNC:
        break;
    }
    return word;
}

Word multiply_words(AlgebraTag tag, const Word& a, const Word& b)
{
    Word out;
    out.reserve(a.size() + b.size());
    if (tag == AlgebraTag::Charge) {
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    } else {
        out.insert(out.end(), a.begin(), a.end());
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::uint32_t total_order(AlgebraTag tag, const Word& word)
{
    std::uint32_t n = 0;
    for (Tree t : word)
        n += t.order() + (is_charge(tag) ? 1 : 0);
    return n;
}

Tree tree_of_word(AlgebraTag tag, const Word& word)
{
    if (is_charge(tag))
        return compose_over(word);
    if (word.empty())
        return Tree();
    if (word.size() > 1)
        throw std::invalid_argument("word with several trees does not denote a single tree");
    return word.front();
}

// ---------------------------------------------------------------- Element

Element Element::unit(AlgebraTag tag) { return basis(tag, {}); }

Element Element::basis(AlgebraTag tag, Word word, const Rational& coeff)
{
    Element x(tag);
    x.add_term(std::move(word), coeff);
    return x;
}

Rational Element::coefficient(const Word& word) const
{
    auto it = terms_.find(normalize_word(tag_, word));
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(Word word, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(normalize_word(tag_, std::move(word)), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Element::check_tag(const Element& other) const
{
    if (tag_ != other.tag_)
        throw std::invalid_argument("algebra tag mismatch: " + std::string(tag_name(tag_)) + " vs " +
                                    std::string(tag_name(other.tag_)));
}

Element& Element::operator+=(const Element& other)
{
    check_tag(other);
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& other)
{
    check_tag(other);
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

Element& Element::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

Element multiply(const Element& a, const Element& b)
{
    if (a.tag() != b.tag())
        throw std::invalid_argument("cannot multiply elements of " + std::string(tag_name(a.tag())) +
                                    " and " + std::string(tag_name(b.tag())));
    Element out(a.tag());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            out.add_term(multiply_words(a.tag(), wa, wb), ca * cb);
    return out;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Element embed_tree(AlgebraTag tag, Tree t)
{
    if (is_charge(tag))
        return Element::basis(tag, decompose_over(t));
    return Element::basis(tag, {t});
}

Rational counit(const Element& x) { return x.coefficient({}); }

std::map<std::uint32_t, Element> grade_components(const Element& x)
{
    std::map<std::uint32_t, Element> out;
    for (const auto& [w, c] : x.terms())
        out.try_emplace(total_order(x.tag(), w), x.tag()).first->second.add_term(w, c);
    return out;
}

Element abelianize(const Element& x)
{
    if (x.tag() != AlgebraTag::ChargeNC)
        throw std::invalid_argument("abelianize expects a HalphaNC element");
    Element out(AlgebraTag::Charge);
    for (const auto& [w, c] : x.terms())
        out.add_term(w, c);
    return out;
}

Element apply_linear(const Element& x, const std::function<Element(const Word&)>& on_word)
{
    std::optional<Element> out;
    for (const auto& [w, c] : x.terms()) {
        Element image = on_word(w);
        image *= c;
        if (out)
            *out += image;
        else
            out = std::move(image);
    }
    return out ? *out : Element(x.tag());
}

Element apply_multiplicative(AlgebraTag out_tag, const Word& word,
                             const std::function<Element(Tree)>& on_letter)
{
    Element out = Element::unit(out_tag);
    for (Tree t : word)
        out = out * on_letter(t);
    return out;
}

// ---------------------------------------------------------------- Tensor

Tensor Tensor::basis(std::vector<AlgebraTag> tags, Key key, const Rational& coeff)
{
    Tensor t(std::move(tags));
    t.add_term(std::move(key), coeff);
    return t;
}

Rational Tensor::coefficient(const Key& key) const
{
    Key normal;
    for (std::size_t i = 0; i < key.size() && i < tags_.size(); ++i)
        normal.push_back(normalize_word(tags_[i], key[i]));
    auto it = terms_.find(normal);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor::add_term(Key key, const Rational& c)
{
    if (key.size() != tags_.size())
        throw std::invalid_argument("tensor key has " + std::to_string(key.size()) + " slots, expected " +
                                    std::to_string(tags_.size()));
    if (c == 0)
        return;
    for (std::size_t i = 0; i < key.size(); ++i)
        key[i] = normalize_word(tags_[i], std::move(key[i]));
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Tensor::check_tags(const Tensor& other) const
{
    if (tags_ != other.tags_)
        throw std::invalid_argument("tensor slot tags differ");
}

Tensor& Tensor::operator+=(const Tensor& other)
{
    check_tags(other);
    for (const auto& [k, c] : other.terms_)
        add_term(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other)
{
    check_tags(other);
    for (const auto& [k, c] : other.terms_)
        add_term(k, -c);
    return *this;
}

Tensor& Tensor::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

Tensor tensor(std::span<const Element> factors)
{
    std::vector<AlgebraTag> tags;
    for (const auto& x : factors)
        tags.push_back(x.tag());
    Tensor out(tags);
    // Cartesian product of the factors' terms.
    Tensor::Key key(factors.size());
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& c) {
        if (i == factors.size()) {
            out.add_term(key, c);
            return;
        }
        for (const auto& [w, ci] : factors[i].terms()) {
            key[i] = w;
            rec(i + 1, c * ci);
        }
    };
    rec(0, Rational(1));
    return out;
}

Tensor tensor(std::initializer_list<Element> factors)
{
    return tensor(std::span<const Element>(factors.begin(), factors.size()));
}

Tensor as_tensor(const Element& x)
{
    Tensor out({x.tag()});
    for (const auto& [w, c] : x.terms())
        out.add_term({w}, c);
    return out;
}

Tensor operator*(const Tensor& a, const Tensor& b)
{
    if (a.tags() != b.tags())
        throw std::invalid_argument("slotwise product needs equal slot tags");
    Tensor out(a.tags());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            Tensor::Key key(ka.size());
            for (std::size_t i = 0; i < ka.size(); ++i)
                key[i] = multiply_words(a.tags()[i], ka[i], kb[i]);
            out.add_term(std::move(key), ca * cb);
        }
    return out;
}

Tensor slot_multiply(const Tensor& t, std::size_t i, std::size_t j, std::size_t target)
{
    const auto n = t.slots();
    if (i >= n || j >= n || i == j || target >= n - 1)
        throw std::out_of_range("slot_multiply: bad slot indices");
    if (t.tags()[i] != t.tags()[j])
        throw std::invalid_argument("slot_multiply: slots carry different algebras");
    const auto product_tag = t.tags()[i];

    auto rearrange = [&](auto&& rest_of, auto&& product) {
        std::vector<std::remove_cvref_t<decltype(product)>> out;
        std::size_t r = 0;
        for (std::size_t pos = 0; pos < n - 1; ++pos) {
            if (pos == target) {
                out.push_back(product);
            } else {
                while (r == i || r == j)
                    ++r;
                out.push_back(rest_of(r));
                ++r;
            }
        }
        return out;
    };

    Tensor out(rearrange([&](std::size_t s) { return t.tags()[s]; }, product_tag));
    for (const auto& [key, c] : t.terms()) {
        auto merged = multiply_words(product_tag, key[i], key[j]);
        out.add_term(rearrange([&](std::size_t s) { return key[s]; }, merged), c);
    }
    return out;
}

Tensor swap_slots(const Tensor& t, std::size_t i, std::size_t j)
{
    auto tags = t.tags();
    std::swap(tags.at(i), tags.at(j));
    Tensor out(tags);
    for (const auto& [key, c] : t.terms()) {
        auto swapped = key;
        std::swap(swapped[i], swapped[j]);
        out.add_term(std::move(swapped), c);
    }
    return out;
}

Element multiply_slots(const Tensor& t)
{
    if (t.slots() == 0)
        throw std::invalid_argument("multiply_slots: empty tensor");
    const auto tag = t.tags().front();
    for (auto s : t.tags())
        if (s != tag)
            throw std::invalid_argument("multiply_slots: slots carry different algebras");
    Element out(tag);
    for (const auto& [key, c] : t.terms()) {
        Word w;
        for (const auto& part : key)
            w = multiply_words(tag, w, part);
        out.add_term(std::move(w), c);
    }
    return out;
}

Tensor apply_on_slots(const Tensor& t, std::size_t first, std::size_t count,
                      const std::vector<AlgebraTag>& out_tags,
                      const std::function<Tensor(const Tensor::Key&)>& fn)
{
    if (first + count > t.slots())
        throw std::out_of_range("apply_on_slots: slot range out of bounds");
    std::vector<AlgebraTag> tags(t.tags().begin(), t.tags().begin() + static_cast<std::ptrdiff_t>(first));
    tags.insert(tags.end(), out_tags.begin(), out_tags.end());
    tags.insert(tags.end(), t.tags().begin() + static_cast<std::ptrdiff_t>(first + count), t.tags().end());
    Tensor out(tags);
    for (const auto& [key, c] : t.terms()) {
        const Tensor::Key sub(key.begin() + static_cast<std::ptrdiff_t>(first),
                              key.begin() + static_cast<std::ptrdiff_t>(first + count));
        const Tensor image = fn(sub);
        if (image.is_zero())
            continue;
        if (image.tags() != out_tags)
            throw std::invalid_argument("apply_on_slots: map produced unexpected slot tags");
        for (const auto& [ikey, ic] : image.terms()) {
            Tensor::Key k(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(first));
            k.insert(k.end(), ikey.begin(), ikey.end());
            k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(first + count), key.end());
            out.add_term(std::move(k), c * ic);
        }
    }
    return out;
}

Tensor apply_on_slot(const Tensor& t, std::size_t slot, const std::vector<AlgebraTag>& out_tags,
                     const std::function<Tensor(const Word&)>& fn)
{
    return apply_on_slots(t, slot, 1, out_tags, [&](const Tensor::Key& sub) { return fn(sub.front()); });
}

Tensor map_slot(const Tensor& t, std::size_t slot, AlgebraTag out_tag,
                const std::function<Element(const Word&)>& fn)
{
    return apply_on_slot(t, slot, {out_tag}, [&](const Word& w) { return as_tensor(fn(w)); });
}

Tensor counit_slot(const Tensor& t, std::size_t slot)
{
    return apply_on_slot(t, slot, {}, [](const Word& w) {
        Tensor scalar(std::vector<AlgebraTag>{});
        if (w.empty())
            scalar.add_term({}, 1);
        return scalar;
    });
}

Tensor abelianize_slot(const Tensor& t, std::size_t slot)
{
    if (t.tags().at(slot) != AlgebraTag::ChargeNC)
        throw std::invalid_argument("abelianize_slot expects a HalphaNC slot");
    return map_slot(t, slot, AlgebraTag::Charge, [](const Word& w) { return Element::basis(AlgebraTag::Charge, w); });
}

Element to_element(const Tensor& t)
{
    if (t.slots() != 1)
        throw std::invalid_argument("to_element expects a one-slot tensor");
    Element out(t.tags().front());
    for (const auto& [key, c] : t.terms())
        out.add_term(key.front(), c);
    return out;
}

std::uint32_t total_order(const std::vector<AlgebraTag>& tags, const Tensor::Key& key)
{
    std::uint32_t n = 0;
    for (std::size_t i = 0; i < key.size(); ++i)
        n += total_order(tags[i], key[i]);
    return n;
}

} // namespace qedtrees
