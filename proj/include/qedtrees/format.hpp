#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qedtrees/algebra.hpp"

namespace qedtrees {

enum class Format { Ascii, Latex, Json };

Format parse_format(std::string_view name);

std::string render_latex(Tree t);

/// Photon/Electron: the letters separated by spaces. Charge: the generator
/// trees V(u) separated by spaces. ChargeNC: the single tree V(u1)/.../V(uk).
/// The empty word is "1".
std::string render_word(AlgebraTag tag, const Word& word, Format format = Format::Ascii);

/// Terms in display order: larger slot orders first (slot by slot), then the
/// canonical order of the words.
std::vector<std::pair<Word, Rational>> display_terms(const Element& x);
std::vector<std::pair<Tensor::Key, Rational>> display_terms(const Tensor& x);

/// ASCII uses "(x)" for the tensor sign, LaTeX "\otimes".
std::string to_text(const Element& x, Format format = Format::Ascii);
std::string to_text(const Tensor& x, Format format = Format::Ascii);

nlohmann::json to_json(const Element& x);
nlohmann::json to_json(const Tensor& x);
nlohmann::json to_json(const Rational& q);

Element element_from_json(const nlohmann::json& j);
Tensor tensor_from_json(const nlohmann::json& j);

/// Parses "c*w + c*w - ..." where each word is "1" or a run of trees. For
/// the charge algebras every tree is read through the identification with
/// (CY, /), so "((e v e) v e)" and "(e v e) (e v e)" denote the same element.
Element parse_element(AlgebraTag tag, std::string_view text);

/// Same for tensors, slots separated by "(x)".
Tensor parse_tensor(const std::vector<AlgebraTag>& tags, std::string_view text);

/// Word denoted by a list of trees, as for parse_element.
Word word_from_trees(AlgebraTag tag, const std::vector<Tree>& trees);

} // namespace qedtrees
