#include "padictree/render.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace padictree {

using json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
    if (name == "ascii") return OutputFormat::ascii;
    if (name == "dot") return OutputFormat::dot;
    if (name == "json") return OutputFormat::json;
    if (name == "latex") return OutputFormat::latex;
    throw DomainError("unknown output format '" + name + "'");
}

namespace {

std::int64_t to_i64(const Integer& n, const char* what) {
    if (!n.fits_slong_p()) throw DomainError(std::string(what) + " " + n.get_str() + " does not fit 64 bits");
    return n.get_si();
}

const char* status_name(NodeStatus::Kind kind) {
    switch (kind) {
    case NodeStatus::Kind::terminating:
        return "terminating";
    case NodeStatus::Kind::nonterminating:
        return "nonterminating";
    case NodeStatus::Kind::unresolved:
        break;
    }
    return "unresolved";
}

std::string glyph(const NodeRecord& node) {
    switch (node.status) {
    case NodeStatus::Kind::terminating:
        return node.valuation ? node.valuation->to_string() : "?";
    case NodeStatus::Kind::nonterminating:
        return "*";
    case NodeStatus::Kind::unresolved:
        break;
    }
    return "?";
}

/// Child indices per node; documents are sorted so parents precede children.
struct Topology {
    std::vector<std::vector<std::size_t>> children;
    std::size_t root = 0;

    explicit Topology(const TreeDocument& doc) : children(doc.nodes.size()) {
        std::map<std::vector<std::int64_t>, std::size_t> index;
        for (std::size_t i = 0; i < doc.nodes.size(); ++i) index.emplace(doc.nodes[i].digits, i);
        for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
            auto digits = doc.nodes[i].digits;
            if (digits.empty()) {
                root = i;
                continue;
            }
            digits.pop_back();
            const auto parent = index.find(digits);
            if (parent == index.end()) throw DomainError("tree document node without a parent");
            children[parent->second].push_back(i);
        }
    }
};

std::string node_name(const NodeRecord& node) {
    std::string out = "n";
    for (auto d : node.digits) out += "_" + std::to_string(d);
    return out;
}

}  // namespace

TreeDocument make_document(const ValuationTree& tree) {
    TreeDocument doc;
    doc.prime = to_i64(tree.prime.value(), "prime");
    doc.generator = tree.generator;
    doc.engine = tree.engine;
    doc.depth = static_cast<std::int64_t>(tree.depth);
    for (const auto& [id, node] : tree.nodes) {
        NodeRecord rec;
        for (const auto& d : id.digits) rec.digits.push_back(to_i64(d, "digit"));
        rec.level = static_cast<std::int64_t>(id.level());
        rec.status = node.status.kind();
        if (node.status.is_terminating()) rec.valuation = node.status.valuation();
        rec.label = to_i64(id.label(tree.prime), "branch label");
        if (node.witness) rec.witness = {to_i64(node.witness->first, "witness"), to_i64(node.witness->second, "witness")};
        doc.nodes.push_back(std::move(rec));
    }
    return doc;
}

std::string to_json(const TreeDocument& doc) {
    json nodes = json::array();
    for (const auto& n : doc.nodes) {
        json rec;
        rec["digits"] = n.digits;
        rec["level"] = n.level;
        rec["status"] = status_name(n.status);
        if (!n.valuation) {
            rec["valuation"] = nullptr;
        } else if (n.valuation->is_infinite()) {
            rec["valuation"] = "inf";
        } else {
            rec["valuation"] = n.valuation->value();
        }
        rec["label"] = n.label;
        rec["witness"] = n.witness ? json::array({n.witness->first, n.witness->second}) : json(nullptr);
        nodes.push_back(std::move(rec));
    }
    json out;
    out["prime"] = doc.prime;
    out["generator"] = doc.generator;
    out["engine"] = doc.engine;
    out["depth"] = doc.depth;
    out["nodes"] = std::move(nodes);
    return out.dump(2) + "\n";
}

TreeDocument document_from_json(const std::string& text) {
    try {
        const json in = json::parse(text);
        TreeDocument doc;
        doc.prime = in.at("prime").get<std::int64_t>();
        doc.generator = in.at("generator").get<std::string>();
        doc.engine = in.at("engine").get<std::string>();
        doc.depth = in.at("depth").get<std::int64_t>();
        for (const auto& n : in.at("nodes")) {
            NodeRecord rec;
            rec.digits = n.at("digits").get<std::vector<std::int64_t>>();
            rec.level = n.at("level").get<std::int64_t>();
            const auto status = n.at("status").get<std::string>();
            if (status == "terminating") {
                rec.status = NodeStatus::Kind::terminating;
            } else if (status == "nonterminating") {
                rec.status = NodeStatus::Kind::nonterminating;
            } else if (status == "unresolved") {
                rec.status = NodeStatus::Kind::unresolved;
            } else {
                throw ParseError("unknown node status '" + status + "'", 0);
            }
            const auto& v = n.at("valuation");
            if (v.is_string()) {
                if (v.get<std::string>() != "inf") throw ParseError("bad valuation string", 0);
                rec.valuation = Valuation::infinite();
            } else if (!v.is_null()) {
                rec.valuation = Valuation::finite(v.get<std::int64_t>());
            }
            rec.label = n.at("label").get<std::int64_t>();
            const auto& w = n.at("witness");
            if (!w.is_null()) rec.witness = {w.at(0).get<std::int64_t>(), w.at(1).get<std::int64_t>()};
            doc.nodes.push_back(std::move(rec));
        }
        return doc;
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    } catch (const json::exception& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string render_ascii(const TreeDocument& doc, bool show_branch_labels) {
    std::ostringstream os;
    os << "# f(n) = " << doc.generator << ", p = " << doc.prime << ", engine = " << doc.engine
       << ", depth = " << doc.depth << "\n";
    if (doc.nodes.empty()) return os.str();
    const Topology topo(doc);
    std::function<void(std::size_t, const std::string&, bool, bool)> walk =
        [&](std::size_t i, const std::string& indent, bool is_root, bool last) {
            const auto& node = doc.nodes[i];
            os << indent;
            if (!is_root) {
                os << (last ? "`-- " : "|-- ");
                if (show_branch_labels) os << node.label << ": ";
            }
            os << "(" << glyph(node) << ")\n";
            const std::string next = is_root ? indent : indent + (last ? "    " : "|   ");
            const auto& kids = topo.children[i];
            for (std::size_t k = 0; k < kids.size(); ++k) walk(kids[k], next, false, k + 1 == kids.size());
        };
    walk(topo.root, "", true, true);
    return os.str();
}

std::string render_dot(const TreeDocument& doc, bool show_branch_labels) {
    std::ostringstream os;
    os << "graph valuation_tree {\n";
    os << "  label=\"" << doc.prime << "-adic valuation tree of " << doc.generator << " (" << doc.engine << ")\";\n";
    os << "  node [shape=circle];\n";
    for (const auto& n : doc.nodes) os << "  " << node_name(n) << " [label=\"" << glyph(n) << "\"];\n";
    for (const auto& n : doc.nodes) {
        if (n.digits.empty()) continue;
        NodeRecord parent;
        parent.digits.assign(n.digits.begin(), n.digits.end() - 1);
        os << "  " << node_name(parent) << " -- " << node_name(n);
        if (show_branch_labels) os << " [label=\"" << n.label << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string render_latex(const TreeDocument& doc, bool show_branch_labels) {
    if (doc.nodes.empty()) return "";
    const Topology topo(doc);

    // Leaves take even columns left to right; parents sit over the midpoint
    // of their first and last child.
    std::vector<std::int64_t> column(doc.nodes.size());
    std::int64_t next_leaf = 0;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        const auto& kids = topo.children[i];
        if (kids.empty()) {
            column[i] = next_leaf;
            next_leaf += 2;
            return;
        }
        for (auto k : kids) place(k);
        column[i] = (column[kids.front()] + column[kids.back()]) / 2;
    };
    place(topo.root);

    std::int64_t rows = 0;
    for (const auto& n : doc.nodes) rows = std::max(rows, n.level + 1);
    const std::int64_t cols = next_leaf - 1;
    std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(rows),
                                               std::vector<std::string>(static_cast<std::size_t>(cols)));
    for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
        std::string cell = "*+[Fo]{" + glyph(doc.nodes[i]) + "}";
        for (auto k : topo.children[i]) {
            const std::int64_t shift = column[k] - column[i];
            std::string dir = "d" + std::string(static_cast<std::size_t>(shift < 0 ? -shift : shift), shift < 0 ? 'l' : 'r');
            cell += " \\ar@{-}[" + dir + "]";
            if (show_branch_labels) cell += (shift < 0 ? "_{" : "^{") + std::to_string(doc.nodes[k].label) + "}";
        }
        grid[static_cast<std::size_t>(doc.nodes[i].level)][static_cast<std::size_t>(column[i])] = std::move(cell);
    }

    std::ostringstream os;
    os << "\\[\n\\xymatrix{\n";
    for (std::size_t r = 0; r < grid.size(); ++r) {
        os << ' ';
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            if (c) os << " & ";
            os << grid[r][c];
        }
        os << (r + 1 < grid.size() ? " \\\\\n" : "\n");
    }
    os << "}\n\\]\n";
    return os.str();
}

std::string render(const TreeDocument& doc, const RenderConfig& config) {
    switch (config.format) {
    case OutputFormat::ascii:
        return render_ascii(doc, config.show_branch_labels);
    case OutputFormat::dot:
        return render_dot(doc, config.show_branch_labels);
    case OutputFormat::json:
        return to_json(doc);
    case OutputFormat::latex:
        break;
    }
    return render_latex(doc, config.show_branch_labels);
}

}  // namespace padictree
