#include "qedtrees/format.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qedtrees {

using nlohmann::json;

Format parse_format(std::string_view name)
{
    if (name == "ascii")
        return Format::Ascii;
    if (name == "latex")
        return Format::Latex;
    if (name == "json")
        return Format::Json;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

std::string render_latex(Tree t)
{
    if (t.is_root())
        return "\\|";
    return "(" + render_latex(t.left()) + " \\vee " + render_latex(t.right()) + ")";
}

namespace {

std::string tree_text(Tree t, Format format) { return format == Format::Latex ? render_latex(t) : render(t); }

std::vector<Tree> display_letters(AlgebraTag tag, const Word& word)
{
    switch (tag) {
    case AlgebraTag::Photon:
    case AlgebraTag::Electron:
        return word;
    case AlgebraTag::Charge: {
        std::vector<Tree> out;
        for (Tree u : word)
            out.push_back(v_wrap(u));
        return out;
    }
    case AlgebraTag::ChargeNC:
        return {compose_over(word)};
    }
    return word;
}

std::string coefficient_prefix(const Rational& c, Format format, bool& negative)
{
    negative = sgn(c) < 0;
    const Rational a = abs(c);
    if (a == 1)
        return "";
    if (format != Format::Latex)
        return to_string(a) + "*";
    if (a.get_den() == 1)
        return a.get_num().get_str() + "\\, ";
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}\\, ";
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [negative, body] = terms[i];
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += body;
    }
    return out;
}

// Fewer letters first, then larger letters first.
bool display_key_less(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i])
            continue;
        if (a[i].order() != b[i].order())
            return a[i].order() > b[i].order();
        return a[i] < b[i];
    }
    return false;
}

bool display_key_less(const Tensor::Key& a, const Tensor::Key& b)
{
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (display_key_less(a[s], b[s]))
            return true;
        if (display_key_less(b[s], a[s]))
            return false;
    }
    return false;
}

template <typename Key>
bool display_less(const std::vector<std::uint32_t>& oa, const Key& a, const std::vector<std::uint32_t>& ob,
                  const Key& b)
{
    if (oa != ob)
        return oa > ob;
    return display_key_less(a, b);
}

} // namespace

std::string render_word(AlgebraTag tag, const Word& word, Format format)
{
    if (word.empty())
        return "1";
    std::string out;
    const char* separator = format == Format::Latex ? "\\, " : " ";
    for (Tree t : display_letters(tag, word)) {
        if (!out.empty())
            out += separator;
        out += tree_text(t, format);
    }
    return out;
}

std::vector<std::pair<Word, Rational>> display_terms(const Element& x)
{
    std::vector<std::pair<Word, Rational>> out(x.terms().begin(), x.terms().end());
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return display_less(std::vector{total_order(x.tag(), a.first)}, a.first,
                            std::vector{total_order(x.tag(), b.first)}, b.first);
    });
    return out;
}

std::vector<std::pair<Tensor::Key, Rational>> display_terms(const Tensor& x)
{
    auto orders = [&](const Tensor::Key& key) {
        std::vector<std::uint32_t> o;
        for (std::size_t s = 0; s < key.size(); ++s)
            o.push_back(total_order(x.tags()[s], key[s]));
        return o;
    };
    std::vector<std::pair<Tensor::Key, Rational>> out(x.terms().begin(), x.terms().end());
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return display_less(orders(a.first), a.first, orders(b.first), b.first);
    });
    return out;
}

std::string to_text(const Element& x, Format format)
{
    if (format == Format::Json)
        return to_json(x).dump();
    std::vector<std::pair<bool, std::string>> terms;
    for (const auto& [word, c] : display_terms(x)) {
        bool negative = false;
        const auto prefix = coefficient_prefix(c, format, negative);
        terms.emplace_back(negative, prefix + render_word(x.tag(), word, format));
    }
    return join_terms(terms);
}

std::string to_text(const Tensor& x, Format format)
{
    if (format == Format::Json)
        return to_json(x).dump();
    const char* sign = format == Format::Latex ? " \\otimes " : " (x) ";
    std::vector<std::pair<bool, std::string>> terms;
    for (const auto& [key, c] : display_terms(x)) {
        bool negative = false;
        std::string body = coefficient_prefix(c, format, negative);
        for (std::size_t s = 0; s < key.size(); ++s) {
            if (s)
                body += sign;
            body += render_word(x.tags()[s], key[s], format);
        }
        if (key.empty())
            body += "1";
        terms.emplace_back(negative, body);
    }
    return join_terms(terms);
}

// ------------------------------------------------------------ JSON

namespace {

json word_json(AlgebraTag tag, const Word& word)
{
    json out = json::array();
    if (tag == AlgebraTag::Photon || tag == AlgebraTag::Electron) {
        for (Tree t : word)
            out.push_back(render(t));
    } else {
        for (Tree u : word)
            out.push_back(render(v_wrap(u)));
    }
    return out;
}

Word word_from_json(AlgebraTag tag, const json& j)
{
    std::vector<Tree> trees;
    for (const auto& entry : j)
        trees.push_back(parse_tree(entry.get<std::string>()));
    return word_from_trees(tag, trees);
}

Rational coeff_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw std::invalid_argument("coefficient must be a string \"p/q\" or an integer");
}

} // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Element& x)
{
    json terms = json::array();
    for (const auto& [word, c] : display_terms(x))
        terms.push_back({{"coeff", to_string(c)}, {"word", word_json(x.tag(), word)}});
    return {{"tag", std::string(tag_name(x.tag()))}, {"terms", terms}};
}

json to_json(const Tensor& x)
{
    json tags = json::array();
    for (auto tag : x.tags())
        tags.push_back(std::string(tag_name(tag)));
    json terms = json::array();
    for (const auto& [key, c] : display_terms(x)) {
        json slots = json::array();
        for (std::size_t s = 0; s < key.size(); ++s)
            slots.push_back(word_json(x.tags()[s], key[s]));
        terms.push_back({{"coeff", to_string(c)}, {"slots", slots}});
    }
    return {{"tags", tags}, {"terms", terms}};
}

Element element_from_json(const json& j)
{
    const auto tag = parse_tag(j.at("tag").get<std::string>());
    Element out(tag);
    for (const auto& term : j.at("terms"))
        out.add_term(word_from_json(tag, term.at("word")), coeff_from_json(term.at("coeff")));
    return out;
}

Tensor tensor_from_json(const json& j)
{
    std::vector<AlgebraTag> tags;
    for (const auto& name : j.at("tags"))
        tags.push_back(parse_tag(name.get<std::string>()));
    Tensor out(tags);
    for (const auto& term : j.at("terms")) {
        const auto& slots = term.at("slots");
        if (slots.size() != tags.size())
            throw std::invalid_argument("tensor term has the wrong number of slots");
        Tensor::Key key;
        for (std::size_t s = 0; s < tags.size(); ++s)
            key.push_back(word_from_json(tags[s], slots[s]));
        out.add_term(std::move(key), coeff_from_json(term.at("coeff")));
    }
    return out;
}

// ------------------------------------------------------------ text parsing

Word word_from_trees(AlgebraTag tag, const std::vector<Tree>& trees)
{
    Word word;
    for (Tree t : trees) {
        if (is_charge(tag)) {
            const auto generators = decompose_over(t);
            word.insert(word.end(), generators.begin(), generators.end());
        } else if (!t.is_root()) {
            word.push_back(t);
        }
    }
    return normalize_word(tag, std::move(word));
}

namespace {

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip();
        return pos_ >= text_.size();
    }
    bool accept(std::string_view token)
    {
        skip();
        if (text_.substr(pos_, token.size()) != token)
            return false;
        pos_ += token.size();
        return true;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_));
    }

    // Optional "p/q*" prefix. A bare "1" not followed by '*' is the unit word.
    Rational coefficient()
    {
        skip();
        const auto start = pos_;
        auto p = pos_;
        while (p < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[p])) || text_[p] == '/'))
            ++p;
        if (p == start)
            return 1;
        auto q = p;
        while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q])))
            ++q;
        if (q < text_.size() && text_[q] == '*') {
            pos_ = q + 1;
            return parse_rational(text_.substr(start, p - start));
        }
        return 1;
    }

    std::vector<Tree> word()
    {
        skip();
        if (accept("1"))
            return {};
        std::vector<Tree> trees;
        while (true) {
            skip();
            if (pos_ >= text_.size())
                break;
            const char c = text_[pos_];
            if ((c != '(' && c != 'e' && c != 'Y') || text_.substr(pos_, 3) == "(x)")
                break;
            trees.push_back(parse_tree_prefix(text_, pos_));
        }
        if (trees.empty())
            fail("expected a word");
        return trees;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

template <typename OnTerm>
void parse_sum(std::string_view text, OnTerm&& on_term)
{
    TermParser parser(text);
    if (parser.done())
        throw ParseError("empty input");
    if (parser.accept("0") && parser.done())
        return;
    TermParser p(text);
    bool negative = p.accept("-");
    if (!negative)
        p.accept("+");
    while (true) {
        on_term(p, negative);
        if (p.done())
            return;
        if (p.accept("+"))
            negative = false;
        else if (p.accept("-"))
            negative = true;
        else
            p.fail("expected '+' or '-'");
    }
}

} // namespace

Element parse_element(AlgebraTag tag, std::string_view text)
{
    Element out(tag);
    parse_sum(text, [&](TermParser& p, bool negative) {
        Rational c = p.coefficient();
        if (negative)
            c = -c;
        out.add_term(word_from_trees(tag, p.word()), c);
    });
    return out;
}

Tensor parse_tensor(const std::vector<AlgebraTag>& tags, std::string_view text)
{
    Tensor out(tags);
    parse_sum(text, [&](TermParser& p, bool negative) {
        Rational c = p.coefficient();
        if (negative)
            c = -c;
        Tensor::Key key;
        for (std::size_t s = 0; s < tags.size(); ++s) {
            if (s && !p.accept("(x)"))
                p.fail("expected '(x)'");
            key.push_back(word_from_trees(tags[s], p.word()));
        }
        out.add_term(std::move(key), c);
    });
    return out;
}

} // namespace qedtrees
