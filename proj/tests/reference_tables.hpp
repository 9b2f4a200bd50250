#pragma once

// Hand-transcribed values of the structure maps on small trees.
// Trees are written with their canonical names Yn.k: Y1.1 is the tree of
// order 1, Y2.1 = ((e v e) v e), Y2.2 = (e v (e v e)), and Y3.1 ... Y3.5
// run from (((e v e) v e) v e) to (e v (e v (e v e))).

#include <regex>
#include <string>
#include <vector>

#include "qedtrees/tree.hpp"

namespace reference {

struct Row {
    const char* input;
    const char* expected;
};

// S^p_e on He.
inline const std::vector<Row> antipode_p_e = {
    {"Y1.1", "-Y1.1"},
    {"Y2.2", "-Y2.2 + Y1.1 Y1.1"},
    {"Y2.1", "-Y2.1"},
    {"Y3.5", "-Y3.5 + Y2.2 Y1.1 + Y1.1 Y2.2 - Y1.1 Y1.1 Y1.1"},
    {"Y3.4", "-Y3.4 + Y1.1 Y2.1"},
};

// Delta^alpha on generators, Halpha (x) Halpha.
inline const std::vector<Row> delta_alpha = {
    {"Y1.1", "Y1.1 (x) 1 + 1 (x) Y1.1"},
    {"Y2.2", "Y2.2 (x) 1 + 1 (x) Y2.2"},
    {"Y3.4", "Y3.4 (x) 1 + Y2.2 (x) Y1.1 + 1 (x) Y3.4"},
    {"Y3.5", "Y3.5 (x) 1 + 1 (x) Y3.5"},
};

// delta on generators, trees (x) Halpha.
inline const std::vector<Row> delta_small = {
    {"Y1.1", "Y1.1 (x) 1"},
    {"Y2.2", "Y2.2 (x) 1"},
    {"Y3.4", "Y3.4 (x) 1 + Y2.2 (x) Y1.1"},
    {"Y3.5", "Y3.5 (x) 1"},
};

// Delta^e, He (x) Halpha (x) He.
inline const std::vector<Row> electron_coaction = {
    {"1", "1 (x) 1 (x) 1"},
    {"Y1.1", "Y1.1 (x) 1 (x) 1 + 1 (x) 1 (x) Y1.1"},
    {"Y2.1", "Y2.1 (x) 1 (x) 1 + Y1.1 (x) Y1.1 (x) 1 + 1 (x) 1 (x) Y2.1"},
    {"Y2.2", "Y2.2 (x) 1 (x) 1 + Y1.1 (x) 1 (x) Y1.1 + 1 (x) 1 (x) Y2.2"},
    {"Y3.1", "Y3.1 (x) 1 (x) 1 + 2*Y2.1 (x) Y1.1 (x) 1 + Y1.1 (x) Y2.1 (x) 1 + 1 (x) 1 (x) Y3.1"},
    {"Y3.2", "Y3.2 (x) 1 (x) 1 + Y1.1 (x) Y2.2 (x) 1 + 1 (x) 1 (x) Y3.2"},
    {"Y3.3",
     "Y3.3 (x) 1 (x) 1 + Y2.2 (x) Y1.1 (x) 1 + Y2.1 (x) 1 (x) Y1.1 + Y1.1 (x) Y1.1 (x) Y1.1 + 1 (x) 1 (x) Y3.3"},
    {"Y3.4", "Y3.4 (x) 1 (x) 1 + Y2.2 (x) Y1.1 (x) 1 + Y1.1 (x) 1 (x) Y2.1 + 1 (x) 1 (x) Y3.4"},
    {"Y3.5", "Y3.5 (x) 1 (x) 1 + Y2.2 (x) 1 (x) Y1.1 + Y1.1 (x) 1 (x) Y2.2 + 1 (x) 1 (x) Y3.5"},
};

// Delta^gamma, Hgamma (x) Halpha.
inline const std::vector<Row> photon_coaction = {
    {"1", "1 (x) 1"},
    {"Y1.1", "Y1.1 (x) 1 + 1 (x) Y1.1"},
    {"Y2.1", "Y2.1 (x) 1 + 2*Y1.1 (x) Y1.1 + 1 (x) Y2.1"},
    {"Y2.2", "Y2.2 (x) 1 + 1 (x) Y2.2"},
    {"Y3.1", "Y3.1 (x) 1 + 3*Y2.1 (x) Y1.1 + 3*Y1.1 (x) Y2.1 + 1 (x) Y3.1"},
    {"Y3.2", "Y3.2 (x) 1 + Y2.2 (x) Y1.1 + Y1.1 (x) Y2.2 + 1 (x) Y3.2"},
    {"Y3.3", "Y3.3 (x) 1 + Y2.2 (x) Y1.1 + Y1.1 (x) Y2.2 + 1 (x) Y3.3"},
    {"Y3.4", "Y3.4 (x) 1 + Y2.2 (x) Y1.1 + 1 (x) Y3.4"},
    {"Y3.5", "Y3.5 (x) 1 + 1 (x) Y3.5"},
};

struct ProductRow {
    char op;
    const char* left;
    const char* right;
    const char* expected;
};

// '/' over, '\\' under, 'v' grafting.
inline const std::vector<ProductRow> products = {
    {'v', "Y1.1", "Y1.1", "Y3.3"}, {'v', "Y2.2", "e", "Y3.2"},    {'/', "Y2.2", "Y1.1", "Y3.2"},
    {'/', "Y1.1", "Y2.2", "Y3.3"}, {'\\', "Y2.1", "Y1.1", "Y3.3"}, {'\\', "Y1.1", "Y2.1", "Y3.4"},
};

// Trees of orders 0 to 3 in canonical order.
inline const std::vector<const char*> listing = {
    "e",
    "(e v e)",
    "((e v e) v e)",
    "(e v (e v e))",
    "(((e v e) v e) v e)",
    "((e v (e v e)) v e)",
    "((e v e) v (e v e))",
    "(e v ((e v e) v e))",
    "(e v (e v (e v e)))",
};

// Expands every Yn.k name into the tree it denotes, giving the plain text
// output of the library.
inline std::string spelled(const std::string& text)
{
    static const std::regex name(R"(Y\d+\.\d+)");
    std::string out;
    auto last = text.cbegin();
    for (std::sregex_iterator it(text.begin(), text.end(), name), end; it != end; ++it) {
        out.append(last, text.cbegin() + it->position());
        out += qedtrees::render(qedtrees::parse_tree(it->str()));
        last = text.cbegin() + it->position() + it->length();
    }
    out.append(last, text.cend());
    return out;
}

} // namespace reference
