#pragma once

// Serialization of valuation trees. The JSON document is the interchange
// format; ASCII, DOT and LaTeX are projections of it.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padictree/tree.hpp"

namespace padictree {

enum class OutputFormat { ascii, dot, json, latex };

struct RenderConfig {
    OutputFormat format = OutputFormat::ascii;
    std::size_t depth = 5;
    bool show_branch_labels = true;
    std::size_t max_extra_depth = 4;
};

/// Throws DomainError for unknown names.
OutputFormat parse_format(const std::string& name);

struct NodeRecord {
    std::vector<std::int64_t> digits;
    std::int64_t level = 0;
    NodeStatus::Kind status = NodeStatus::Kind::unresolved;
    std::optional<Valuation> valuation;  // terminating nodes only
    std::int64_t label = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> witness;

    friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

struct TreeDocument {
    std::int64_t prime = 2;
    std::string generator;
    std::string engine;
    std::int64_t depth = 0;
    std::vector<NodeRecord> nodes;  // sorted by (level, digits)

    friend bool operator==(const TreeDocument&, const TreeDocument&) = default;
};

/// Throws DomainError if a label or witness does not fit 64 bits.
TreeDocument make_document(const ValuationTree& tree);

std::string to_json(const TreeDocument& doc);
/// Throws ParseError on malformed input.
TreeDocument document_from_json(const std::string& text);

std::string render_ascii(const TreeDocument& doc, bool show_branch_labels = true);
std::string render_dot(const TreeDocument& doc, bool show_branch_labels = true);
/// xymatrix diagram: circled valuations, circled asterisks, "?" for
/// unresolved nodes.
std::string render_latex(const TreeDocument& doc, bool show_branch_labels = true);

std::string render(const TreeDocument& doc, const RenderConfig& config);

}  // namespace padictree
