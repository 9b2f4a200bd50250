#include "qedtrees/tree.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qedtrees {

namespace detail {

struct TreeNode {
    const TreeNode* left;
    const TreeNode* right;
    std::uint32_t order;
    std::size_t hash;
};

namespace {

constexpr std::size_t kRootHash = 0x9e3779b97f4a7c15ULL;

std::size_t node_hash(const TreeNode* n) { return n ? n->hash : kRootHash; }
std::uint32_t node_order(const TreeNode* n) { return n ? n->order : 0; }

struct ChildrenHash {
    std::size_t operator()(const std::pair<const TreeNode*, const TreeNode*>& p) const noexcept
    {
        auto h = std::hash<const void*>{}(p.first);
        return h ^ (std::hash<const void*>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

class InternTable {
public:
    const TreeNode* get(const TreeNode* l, const TreeNode* r)
    {
        const auto key = std::make_pair(l, r);
        {
            std::shared_lock lock(mutex_);
            if (auto it = nodes_.find(key); it != nodes_.end())
                return it->second.get();
        }
        std::unique_lock lock(mutex_);
        auto& slot = nodes_[key];
        if (!slot) {
            std::size_t h = node_hash(l) * 31 + 17;
            h ^= node_hash(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            slot = std::make_unique<TreeNode>(TreeNode{l, r, node_order(l) + node_order(r) + 1, h});
        }
        return slot.get();
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<std::pair<const TreeNode*, const TreeNode*>, std::unique_ptr<TreeNode>, ChildrenHash>
        nodes_;
};

InternTable& intern_table()
{
    static InternTable table;
    return table;
}

} // namespace
} // namespace detail

std::uint32_t Tree::order() const noexcept { return detail::node_order(node_); }

std::size_t Tree::hash() const noexcept { return detail::node_hash(node_); }

Tree Tree::left() const
{
    if (!node_)
        throw std::domain_error("the root tree has no left part");
    return Tree(node_->left);
}

Tree Tree::right() const
{
    if (!node_)
        throw std::domain_error("the root tree has no right part");
    return Tree(node_->right);
}

std::strong_ordering operator<=>(Tree a, Tree b) noexcept
{
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    if (auto c = a.order() <=> b.order(); c != 0)
        return c;
    // Same positive order from here on.
    const Tree al(a.node_->left), bl(b.node_->left);
    if (al.order() != bl.order())
        return al.order() > bl.order() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = al <=> bl; c != 0)
        return c;
    return Tree(a.node_->right) <=> Tree(b.node_->right);
}

Tree graft(Tree l, Tree r) { return Tree(detail::intern_table().get(l.node_, r.node_)); }

std::pair<Tree, Tree> un_graft(Tree t) { return {t.left(), t.right()}; }

Tree over(Tree t, Tree s)
{
    if (s.is_root())
        return t;
    return graft(over(t, s.left()), s.right());
}

Tree under(Tree t, Tree s)
{
    if (t.is_root())
        return s;
    return graft(t.left(), under(t.right(), s));
}

Tree v_wrap(Tree t) { return graft(Tree(), t); }

std::vector<Tree> decompose_over(Tree t)
{
    // t = t^l / V(t^r), walking down the left spine.
    std::vector<Tree> args;
    for (; !t.is_root(); t = t.left())
        args.push_back(t.right());
    std::reverse(args.begin(), args.end());
    return args;
}

std::vector<Tree> decompose_under(Tree t)
{
    // t = (t^l v e) \ t^r, walking down the right spine.
    std::vector<Tree> args;
    for (; !t.is_root(); t = t.right())
        args.push_back(t.left());
    return args;
}

Tree compose_over(std::span<const Tree> generator_args)
{
    Tree t;
    for (Tree u : generator_args)
        t = graft(t, u);
    return t;
}

Tree compose_under(std::span<const Tree> generator_args)
{
    Tree t;
    for (auto it = generator_args.rbegin(); it != generator_args.rend(); ++it)
        t = graft(*it, t);
    return t;
}

namespace {

struct EnumerationCache {
    std::mutex mutex;
    std::deque<std::vector<Tree>> levels;
};

EnumerationCache& enumeration_cache()
{
    static EnumerationCache cache;
    return cache;
}

} // namespace

const std::vector<Tree>& enumerate(std::uint32_t n)
{
    auto& cache = enumeration_cache();
    std::lock_guard lock(cache.mutex);
    if (cache.levels.empty())
        cache.levels.push_back({Tree()});
    while (cache.levels.size() <= n) {
        const auto m = static_cast<std::uint32_t>(cache.levels.size());
        std::vector<Tree> level;
        level.reserve(catalan(m));
        // Larger left subtree first; nested loops then emit canonical order.
        for (std::uint32_t k = m; k-- > 0;)
            for (Tree l : cache.levels[k])
                for (Tree r : cache.levels[m - 1 - k])
                    level.push_back(graft(l, r));
        cache.levels.push_back(std::move(level));
    }
    return cache.levels[n];
}

std::uint64_t catalan(std::uint32_t n)
{
    std::uint64_t c = 1;
    for (std::uint32_t k = 0; k < n; ++k)
        c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

std::size_t canonical_index(Tree t)
{
    const auto& level = enumerate(t.order());
    auto it = std::lower_bound(level.begin(), level.end(), t);
    return static_cast<std::size_t>(it - level.begin()) + 1;
}

std::string canonical_name(Tree t)
{
    return "Y" + std::to_string(t.order()) + "." + std::to_string(canonical_index(t));
}

namespace {

void render_into(Tree t, std::string& out)
{
    if (t.is_root()) {
        out += 'e';
        return;
    }
    out += '(';
    render_into(t.left(), out);
    out += " v ";
    render_into(t.right(), out);
    out += ')';
}

void skip_space(std::string_view text, std::size_t& pos)
{
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
}

std::uint64_t parse_number(std::string_view text, std::size_t& pos)
{
    const auto start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > (1u << 20))
            throw ParseError("number too large in tree alias");
        ++pos;
    }
    if (pos == start)
        throw ParseError("expected a number at offset " + std::to_string(start));
    return value;
}

} // namespace

std::string render(Tree t)
{
    std::string out;
    out.reserve(6 * t.order() + 1);
    render_into(t, out);
    return out;
}

Tree parse_tree_prefix(std::string_view text, std::size_t& pos)
{
    skip_space(text, pos);
    if (pos >= text.size())
        throw ParseError("unexpected end of tree text");
    const char c = text[pos];
    if (c == 'e') {
        ++pos;
        return Tree();
    }
    if (c == 'Y') {
        ++pos;
        const auto n = parse_number(text, pos);
        if (pos >= text.size() || text[pos] != '.')
            throw ParseError("expected '.' in tree alias");
        ++pos;
        const auto k = parse_number(text, pos);
        if (n > 16)
            throw ParseError("tree alias order too large");
        const auto& level = enumerate(static_cast<std::uint32_t>(n));
        if (k < 1 || k > level.size())
            throw ParseError("tree alias index out of range: Y" + std::to_string(n) + "." + std::to_string(k));
        return level[k - 1];
    }
    if (c != '(')
        throw ParseError(std::string("unexpected character '") + c + "' at offset " + std::to_string(pos));
    ++pos;
    const Tree l = parse_tree_prefix(text, pos);
    skip_space(text, pos);
    if (pos >= text.size() || text[pos] != 'v')
        throw ParseError("expected 'v' at offset " + std::to_string(pos));
    ++pos;
    const Tree r = parse_tree_prefix(text, pos);
    skip_space(text, pos);
    if (pos >= text.size() || text[pos] != ')')
        throw ParseError("expected ')' at offset " + std::to_string(pos));
    ++pos;
    return graft(l, r);
}

Tree parse_tree(std::string_view text)
{
    std::size_t pos = 0;
    const Tree t = parse_tree_prefix(text, pos);
    skip_space(text, pos);
    if (pos != text.size())
        throw ParseError("trailing characters after tree at offset " + std::to_string(pos));
    return t;
}

} // namespace qedtrees
