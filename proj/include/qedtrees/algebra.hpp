#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "qedtrees/scalar.hpp"
#include "qedtrees/tree.hpp"

namespace qedtrees {

/// The four tree algebras.
///
///  - Photon   : free algebra on trees, unit = e, Hopf structure from the over-pruning.
///  - Electron : free algebra on trees, unit = e, Hopf structure from the under-pruning.
///  - Charge   : commutative polynomials on the generators V(u).
///  - ChargeNC : noncommutative polynomials on V(u), isomorphic to (CY, /).
enum class AlgebraTag : std::uint8_t { Photon, Electron, Charge, ChargeNC };

std::string_view tag_name(AlgebraTag tag);
AlgebraTag parse_tag(std::string_view name);

inline bool is_charge(AlgebraTag tag) { return tag == AlgebraTag::Charge || tag == AlgebraTag::ChargeNC; }

/// A basis monomial.
///
/// For Photon/Electron the letters are the trees themselves (never `e`).
/// For Charge/ChargeNC each letter u stands for the generator V(u), so `e`
/// is a legal letter (V(e) is the tree Y); Charge words are kept sorted.
/// The empty word is the unit in every algebra.
using Word = std::vector<Tree>;

/// Brings a word into the normal form of `tag`.
Word normalize_word(AlgebraTag tag, Word word);

Word multiply_words(AlgebraTag tag, const Word& a, const Word& b);

/// Sum of tree orders (Photon/Electron) or sum of |u|+1 (Charge/ChargeNC).
std::uint32_t total_order(AlgebraTag tag, const Word& word);

/// The tree a word denotes: V(u1)/.../V(uk) for the charge algebras, the
/// single letter (or `e`) for Photon/Electron. Throws std::invalid_argument
/// for a Photon/Electron word with two or more letters.
Tree tree_of_word(AlgebraTag tag, const Word& word);

/// Finite linear combination of basis words of one algebra.
class Element {
public:
    using Terms = std::map<Word, Rational>;

    explicit Element(AlgebraTag tag = AlgebraTag::Electron) : tag_(tag) {}

    static Element unit(AlgebraTag tag);
    static Element basis(AlgebraTag tag, Word word, const Rational& coeff = 1);

    AlgebraTag tag() const { return tag_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Word& word) const;

    /// Adds c * word; the word is normalized first.
    void add_term(Word word, const Rational& c);

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Rational& c);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Rational(-1); }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }

    friend bool operator==(const Element& a, const Element& b) = default;

private:
    void check_tag(const Element& other) const;

    AlgebraTag tag_;
    Terms terms_;
};

/// Product in the algebra of the common tag. Throws on tag mismatch.
Element multiply(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);

/// Basis element of a single tree; for the charge algebras this is the
/// generator word decompose_over(t).
Element embed_tree(AlgebraTag tag, Tree t);

/// Coefficient of the empty word.
Rational counit(const Element& x);

std::map<std::uint32_t, Element> grade_components(const Element& x);

/// Image of a ChargeNC element in the commutative quotient.
Element abelianize(const Element& x);

/// Linear extension of a map given on basis words.
Element apply_linear(const Element& x, const std::function<Element(const Word&)>& on_word);

/// Multiplicative extension of a map given on letters, in written order.
Element apply_multiplicative(AlgebraTag out_tag, const Word& word,
                             const std::function<Element(Tree)>& on_letter);

/// Finite linear combination of tuples of basis words.
class Tensor {
public:
    using Key = std::vector<Word>;
    using Terms = std::map<Key, Rational>;

    Tensor() = default;
    explicit Tensor(std::vector<AlgebraTag> tags) : tags_(std::move(tags)) {}

    static Tensor basis(std::vector<AlgebraTag> tags, Key key, const Rational& coeff = 1);

    const std::vector<AlgebraTag>& tags() const { return tags_; }
    std::size_t slots() const { return tags_.size(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Key& key) const;
    void add_term(Key key, const Rational& c);

    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Tensor& operator*=(const Rational& c);

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Rational& c, Tensor a) { return a *= c; }

    friend bool operator==(const Tensor& a, const Tensor& b) = default;

private:
    void check_tags(const Tensor& other) const;

    std::vector<AlgebraTag> tags_;
    Terms terms_;
};

/// x1 (x) x2 (x) ... ; each factor contributes one slot.
Tensor tensor(std::span<const Element> factors);
Tensor tensor(std::initializer_list<Element> factors);

/// One-slot tensor holding x.
Tensor as_tensor(const Element& x);

/// Slotwise product of two tensors with equal tags.
Tensor operator*(const Tensor& a, const Tensor& b);

/// Multiplies slot i by slot j (in that order, with slot i's product) and
/// places the result at position `target` of the shortened tuple. Indices
/// are 0-based; `target` indexes the output.
Tensor slot_multiply(const Tensor& t, std::size_t i, std::size_t j, std::size_t target);

/// Swaps two slots (the flip tau).
Tensor swap_slots(const Tensor& t, std::size_t i, std::size_t j);

/// Full product of a tensor whose slots share one tag.
Element multiply_slots(const Tensor& t);

/// Replaces slots [first, first+count) of every term by the image of that
/// sub-tuple under `fn`, whose output slots carry `out_tags`.
Tensor apply_on_slots(const Tensor& t, std::size_t first, std::size_t count,
                      const std::vector<AlgebraTag>& out_tags,
                      const std::function<Tensor(const Tensor::Key&)>& fn);

/// Single-slot version of apply_on_slots.
Tensor apply_on_slot(const Tensor& t, std::size_t slot, const std::vector<AlgebraTag>& out_tags,
                     const std::function<Tensor(const Word&)>& fn);

/// Applies an algebra-valued linear map to one slot; the slot tag becomes out_tag.
Tensor map_slot(const Tensor& t, std::size_t slot, AlgebraTag out_tag,
                const std::function<Element(const Word&)>& fn);

/// Contracts one slot with the counit.
Tensor counit_slot(const Tensor& t, std::size_t slot);

/// Abelianizes one ChargeNC slot.
Tensor abelianize_slot(const Tensor& t, std::size_t slot);

/// Reads a one-slot tensor as an element.
Element to_element(const Tensor& t);

/// Sum of per-slot total orders of a key.
std::uint32_t total_order(const std::vector<AlgebraTag>& tags, const Tensor::Key& key);

} // namespace qedtrees
