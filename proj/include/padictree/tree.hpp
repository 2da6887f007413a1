#pragma once

// p-adic valuation trees of polynomial sequences.
//
// A node at level k with digits d_0..d_{k-1} is the residue class
// {d_0 + d_1 p + ... + d_{k-1} p^{k-1} + n p^k : n >= 0}. Three builders
// exist: the analytic one (products of linear factors, classified from the
// digits of their roots), the partial one (linear factors plus a residual
// without rational roots) and the empirical one (congruence and witness
// certificates only).

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padictree/expansion.hpp"
#include "padictree/polynomial.hpp"

namespace padictree {

struct NodeId {
    Digits digits;

    std::size_t level() const { return digits.size(); }
    NodeId child(const Integer& digit) const;
    /// Truncation value of the digits: the number written above the branch.
    Integer label(const Prime& p) const { return truncation_value(digits, p); }
    /// True if this node's digits are a prefix of `path`.
    bool is_prefix_of(std::span<const Integer> path) const;

    friend bool operator==(const NodeId&, const NodeId&) = default;
    /// Ordered by level, then lexicographically by digits.
    friend std::strong_ordering operator<=>(const NodeId& a, const NodeId& b);

    /// "[0,1,1]"
    std::string to_string() const;
};

class NodeStatus {
public:
    enum class Kind { terminating, nonterminating, unresolved };

    static NodeStatus terminating(Valuation v) { return NodeStatus(Kind::terminating, v); }
    static NodeStatus nonterminating() { return NodeStatus(Kind::nonterminating, {}); }
    static NodeStatus unresolved() { return NodeStatus(Kind::unresolved, {}); }

    Kind kind() const { return kind_; }
    bool is_terminating() const { return kind_ == Kind::terminating; }
    bool is_nonterminating() const { return kind_ == Kind::nonterminating; }
    bool is_unresolved() const { return kind_ == Kind::unresolved; }
    /// Throws DomainError unless terminating.
    Valuation valuation() const;

    friend bool operator==(const NodeStatus&, const NodeStatus&) = default;

    /// "3", "*" or "?"
    std::string glyph() const;

private:
    NodeStatus(Kind kind, Valuation v) : kind_(kind), valuation_(v) {}

    Kind kind_;
    Valuation valuation_;
};

/// Two members of a node whose terms have different valuations.
using Witness = std::pair<Integer, Integer>;

struct TreeNode {
    NodeStatus status;
    std::optional<Witness> witness;
};

struct ValuationTree {
    Prime prime;
    std::size_t depth = 0;
    std::string generator;
    std::string engine;
    /// The root plus every child of a non-terminating or unresolved node
    /// above `depth`.
    std::map<NodeId, TreeNode> nodes;

    const TreeNode* find(const NodeId& id) const;
    std::vector<NodeId> children(const NodeId& id) const;
    /// Non-terminating nodes none of whose materialized children are
    /// non-terminating; at full depth these end the infinite branches.
    std::size_t count_nonterminating_leaves() const;
};

/// Status of `node` for constant * product(factors), read off from the first
/// digit where the node leaves each root. Factors whose root is not in Z_p
/// contribute nothing.
NodeStatus classify_node_linear(const NodeId& node, const Prime& p, const Rational& constant,
                                std::span<const LinearFactor> factors);

/// Requires a constant residual (EngineMismatch otherwise) and f != 0.
ValuationTree build_analytic_tree(const FactoredPolynomial& f, const Prime& p, std::size_t depth);

/// Root prefixes of every factor mark non-terminating nodes; elsewhere linear
/// factors are classified exactly and the residual empirically.
ValuationTree build_partial_tree(const FactoredPolynomial& f, const Prime& p, std::size_t depth,
                                 std::size_t root_depth, std::size_t max_extra_depth = 4);

struct EmpiricalVerdict {
    NodeStatus status;
    std::optional<Witness> witness;
};

/// Congruence certificate, then witness probes, then recursion into children
/// for up to `max_extra_depth` further levels. `probe_hints` are extra sample
/// points; those outside the node are ignored.
EmpiricalVerdict classify_node_empirical(const Polynomial& f, const Prime& p, const NodeId& node,
                                         std::size_t max_extra_depth, std::span<const Integer> probe_hints = {});

ValuationTree build_empirical_tree(const Polynomial& f, const Prime& p, std::size_t depth,
                                   std::size_t max_extra_depth);

/// Distinct rational roots -b/a with p not dividing a. Requires a constant residual.
std::size_t infinite_branch_count(const FactoredPolynomial& f, const Prime& p);

struct NodeDifference {
    NodeId node;
    NodeStatus first;
    NodeStatus second;
};

struct TreeDiff {
    std::vector<NodeDifference> disagreements;
    /// Pairs where either side is unresolved; never counted as disagreements.
    std::vector<NodeDifference> incomparable;
};

/// Compares nodes present in both trees up to the smaller depth. Throws
/// DomainError on a prime mismatch.
TreeDiff diff_trees(const ValuationTree& first, const ValuationTree& second);

}  // namespace padictree
