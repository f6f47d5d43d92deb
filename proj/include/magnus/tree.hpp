#ifndef MAGNUS_TREE_HPP
#define MAGNUS_TREE_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <magnus/rational.hpp>

namespace magnus
{

// Left-ordered rooted tree indexing one Magnus term. A tree is either a
// leaf or a node carrying the grafted subtrees (tau_1, ..., tau_r), r >= 1,
// hanging off its left spine. The integration decorations are implicit:
// every graft carries its own integral and the root carries the outer one.
//
// Trees are immutable and share structure, so copies are cheap.
class Tree
{
public:
    static Tree leaf();
    static Tree node(std::vector<Tree> children);

    bool is_leaf() const noexcept { return children_ == nullptr; }
    std::size_t leaves() const noexcept { return leaves_; }

    // Empty for a leaf.
    std::span<const Tree> children() const noexcept;

    friend bool operator==(const Tree &a, const Tree &b);

private:
    Tree() = default;

    std::shared_ptr<const std::vector<Tree>> children_;
    std::size_t leaves_ = 1;
};

class NoDecomposition : public std::invalid_argument
{
public:
    NoDecomposition() : std::invalid_argument("a leaf has no left-ordered decomposition") {}
};

class TreeParseError : public std::invalid_argument
{
public:
    TreeParseError(const std::string &what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// All trees with n leaves, in canonical order.
struct TreeSet {
    std::size_t n = 0;
    std::vector<Tree> members;
};

// Canonical order: by graft count r, then by the composition of n - 1 into
// r parts (lexicographic), then by the subtrees, each in its own canonical
// order with tau_1 varying slowest. Throws std::invalid_argument for n = 0.
TreeSet enumerate(std::size_t n);

// The grafted subtrees (tau_1, ..., tau_r); throws NoDecomposition on a leaf.
std::span<const Tree> decompose(const Tree &t);

// "L" for a leaf, "(c_1 c_2 ... c_r)" for a node.
std::string serialize(const Tree &t);
Tree parse(std::string_view text);

// Catalan(n - 1), via C_{k+1} = sum_i C_i C_{k-i}.
BigInt count(std::size_t n);

// Renders the integrand H_tau as [[H(t1), int_0^{t1} dt2 H_{tau_1}(t2)], ...].
// Variables are numbered depth-first starting from t1 at the root.
std::string to_commutator_expression(const Tree &t);

} // namespace magnus

#endif
