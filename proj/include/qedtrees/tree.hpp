#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qedtrees {

namespace detail {
struct TreeNode;
}

/// A planar binary tree.
///
/// Trees are hash-consed: two structurally equal trees share the same node,
/// so equality and hashing are O(1). The default-constructed tree is the
/// root tree `e` (order 0). Ordering is the canonical order: smaller order
/// first; within one order, the tree with the larger left subtree comes
/// first, ties broken by left subtrees and then right subtrees.
class Tree {
public:
    constexpr Tree() noexcept = default;

    static Tree root() noexcept { return Tree(); }

    bool is_root() const noexcept { return node_ == nullptr; }
    std::uint32_t order() const noexcept;

    /// Left and right parts of t = l v r. Throws std::domain_error on `e`.
    Tree left() const;
    Tree right() const;

    std::size_t hash() const noexcept;

    friend bool operator==(Tree a, Tree b) noexcept { return a.node_ == b.node_; }
    friend std::strong_ordering operator<=>(Tree a, Tree b) noexcept;

private:
    explicit Tree(const detail::TreeNode* node) noexcept : node_(node) {}

    const detail::TreeNode* node_ = nullptr;

    friend Tree graft(Tree l, Tree r);
};

struct TreeHash {
    std::size_t operator()(Tree t) const noexcept { return t.hash(); }
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// l v r: joins two trees on a new root.
Tree graft(Tree l, Tree r);

/// Inverse of graft. Throws std::domain_error on `e`.
std::pair<Tree, Tree> un_graft(Tree t);

/// t / s, grafting t on the leftmost leaf of s.
Tree over(Tree t, Tree s);

/// t \ s, grafting s on the rightmost leaf of t.
Tree under(Tree t, Tree s);

/// V(t) = e v t.
Tree v_wrap(Tree t);

/// (u1..uk) with t = V(u1) / ... / V(uk).
std::vector<Tree> decompose_over(Tree t);

/// (u1..uk) with t = (u1 v e) \ ... \ (uk v e).
std::vector<Tree> decompose_under(Tree t);

/// Inverse of decompose_over.
Tree compose_over(std::span<const Tree> generator_args);

/// Inverse of decompose_under.
Tree compose_under(std::span<const Tree> generator_args);

/// All trees of order n in canonical order. Memoized and thread-safe.
const std::vector<Tree>& enumerate(std::uint32_t n);

std::uint64_t catalan(std::uint32_t n);

/// 1-based position of t in enumerate(t.order()).
std::size_t canonical_index(Tree t);

/// "Y<n>.<k>"; "e" is also "Y0.1".
std::string canonical_name(Tree t);

/// Canonical text: "e" or "(l v r)".
std::string render(Tree t);

/// Accepts the canonical grammar with arbitrary whitespace, and "Y<n>.<k>"
/// aliases in any tree position.
Tree parse_tree(std::string_view text);

/// Parses one tree starting at `pos`, advancing it past the tree.
Tree parse_tree_prefix(std::string_view text, std::size_t& pos);

} // namespace qedtrees

template <>
struct std::hash<qedtrees::Tree> {
    std::size_t operator()(qedtrees::Tree t) const noexcept { return t.hash(); }
};
