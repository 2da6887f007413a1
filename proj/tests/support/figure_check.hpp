#pragma once

#include <map>
#include <string>

#include "figures.hpp"
#include "padictree/tree.hpp"

namespace figures {

inline padictree::ValuationTree build(const Figure& fig) {
    using namespace padictree;
    const FactoredPolynomial f = parse(fig.expr);
    const Prime p(fig.prime);
    if (fig.engine == "analytic") return build_analytic_tree(f, p, fig.depth);
    if (fig.engine == "empirical") return build_empirical_tree(expand(f), p, fig.depth, 4);
    return build_partial_tree(f, p, fig.depth, fig.depth + 4, 4);
}

/// Empty when the tree's nodes up to the drawn level match the figure
/// exactly; otherwise a description of the first mismatch.
inline std::string compare(const Figure& fig, const padictree::ValuationTree& tree) {
    std::map<std::string, const Node*> expected;
    for (const auto& n : *fig.nodes) expected.emplace(n.digits, &n);
    std::size_t seen = 0;
    for (const auto& [id, node] : tree.nodes) {
        if (id.level() > fig.max_level) continue;
        const auto key = id.to_string();
        const auto it = expected.find(key);
        if (it == expected.end()) return "unexpected node " + key;
        const std::string glyph = node.status.glyph();
        if (glyph != it->second->glyph) return "node " + key + ": got " + glyph + ", drawn " + it->second->glyph;
        const auto label = id.label(tree.prime);
        if (label != it->second->label) return "node " + key + ": label " + label.get_str();
        ++seen;
    }
    if (seen != expected.size()) return "tree has " + std::to_string(seen) + " drawn-level nodes, figure " +
                                        std::to_string(expected.size());
    return "";
}

}  // namespace figures
