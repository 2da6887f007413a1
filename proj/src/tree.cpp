#include "padictree/tree.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "padictree/zp_roots.hpp"

namespace padictree {

// ---------------------------------------------------------------------------
// Data model

NodeId NodeId::child(const Integer& digit) const {
    NodeId out{digits};
    out.digits.push_back(digit);
    return out;
}

bool NodeId::is_prefix_of(std::span<const Integer> path) const {
    return digits.size() <= path.size() && std::equal(digits.begin(), digits.end(), path.begin());
}

std::strong_ordering operator<=>(const NodeId& a, const NodeId& b) {
    if (a.level() != b.level()) return a.level() <=> b.level();
    for (std::size_t i = 0; i < a.level(); ++i) {
        const int c = cmp(a.digits[i], b.digits[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string NodeId::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ',';
        out += digits[i].get_str();
    }
    return out + "]";
}

Valuation NodeStatus::valuation() const {
    if (kind_ != Kind::terminating) throw DomainError("only terminating nodes carry a valuation");
    return valuation_;
}

std::string NodeStatus::glyph() const {
    switch (kind_) {
    case Kind::terminating:
        return valuation_.to_string();
    case Kind::nonterminating:
        return "*";
    case Kind::unresolved:
        break;
    }
    return "?";
}

const TreeNode* ValuationTree::find(const NodeId& id) const {
    const auto it = nodes.find(id);
    return it == nodes.end() ? nullptr : &it->second;
}

std::vector<NodeId> ValuationTree::children(const NodeId& id) const {
    std::vector<NodeId> out;
    const unsigned long base = prime.small();
    for (unsigned long d = 0; d < base; ++d) {
        NodeId c = id.child(Integer(d));
        if (nodes.contains(c)) out.push_back(std::move(c));
    }
    return out;
}

std::size_t ValuationTree::count_nonterminating_leaves() const {
    std::size_t count = 0;
    for (const auto& [id, node] : nodes) {
        if (!node.status.is_nonterminating()) continue;
        const auto kids = children(id);
        const bool continues = std::any_of(kids.begin(), kids.end(),
                                           [&](const NodeId& c) { return nodes.at(c).status.is_nonterminating(); });
        if (!continues) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

struct Sample {
    Integer n;
    Valuation v;
};

/// Integer form F = D * f and the valuation shift v_p(D).
struct ClearedPolynomial {
    std::vector<Integer> coefficients;
    Valuation shift;

    ClearedPolynomial(const Polynomial& f, const Prime& p) {
        auto [d, ints] = clear_denominators(f);
        coefficients = std::move(ints);
        shift = valuation(d, p);
    }

    Valuation raw(const Integer& n, const Prime& p) const { return valuation(evaluate(coefficients, n), p); }
};

bool in_node(const Integer& n, const Integer& label, const Integer& modulus) {
    if (n < 0) return false;
    return mpz_congruent_p(n.get_mpz_t(), label.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

std::vector<unsigned long> probe_offsets(unsigned long p) {
    std::vector<unsigned long> out{0, 1, 2, p, p + 1};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Witness> first_distinct(const std::vector<Sample>& samples) {
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].v != samples[0].v) return Witness{samples[0].n, samples[i].n};
    }
    return std::nullopt;
}

/// Searches small members of the node first, then the truncations of the
/// given Z_p points (digit paths through the node) at growing precision.
std::optional<Witness> find_witness(const ClearedPolynomial& F, const Prime& p, const NodeId& node,
                                    const std::vector<const Digits*>& paths) {
    const Integer label = node.label(p);
    const Integer modulus = power(p, node.level());
    std::vector<Sample> samples;
    auto add = [&](const Integer& n) {
        samples.push_back({n, F.raw(n, p)});
        return first_distinct(samples);
    };
    for (unsigned long t : probe_offsets(p.small())) {
        if (auto w = add(label + modulus * t)) return w;
    }
    for (const Digits* path : paths) {
        for (std::size_t len = node.level() + 1; len <= path->size(); ++len) {
            const Integer n = truncation_value(std::span<const Integer>(path->data(), len), p);
            if (auto w = add(n)) return w;
            if (auto w = add(n + power(p, len))) return w;
        }
    }
    return std::nullopt;
}

std::vector<LinearFactor> zp_factors(const FactoredPolynomial& f, const Prime& p) {
    std::vector<LinearFactor> out;
    for (const auto& lf : f.linear_factors) {
        if (is_padic_integer(lf.root(), p)) out.push_back(lf);
    }
    return out;
}

/// First index j < level with node digit != root digit, if any.
std::optional<std::size_t> divergence(const NodeId& node, const Digits& root_digits) {
    for (std::size_t j = 0; j < node.level(); ++j) {
        if (node.digits[j] != root_digits[j]) return j;
    }
    return std::nullopt;
}

/// Digit-rule classification over precomputed root digits (length >= level).
NodeStatus classify_by_digits(const NodeId& node, Valuation base, const std::vector<Digits>& root_digits) {
    std::int64_t total = 0;
    for (const auto& digits : root_digits) {
        const auto j = divergence(node, digits);
        if (!j) return NodeStatus::nonterminating();
        total += static_cast<std::int64_t>(*j);
    }
    return NodeStatus::terminating(base + Valuation::finite(total));
}

// Precision of root digits used for witness searches below a node.
constexpr std::size_t kWitnessPrecision = 24;

template <typename Classify>
ValuationTree grow_tree(ValuationTree tree, Classify&& classify) {
    const unsigned long base = tree.prime.small();
    std::deque<NodeId> queue{NodeId{}};
    while (!queue.empty()) {
        NodeId id = std::move(queue.front());
        queue.pop_front();
        TreeNode node = classify(id);
        const bool splits = !node.status.is_terminating();
        if (splits && id.level() < tree.depth) {
            for (unsigned long d = 0; d < base; ++d) queue.push_back(id.child(Integer(d)));
        }
        tree.nodes.emplace(std::move(id), std::move(node));
    }
    return tree;
}

}  // namespace

// ---------------------------------------------------------------------------
// Analytic engine

NodeStatus classify_node_linear(const NodeId& node, const Prime& p, const Rational& constant,
                                std::span<const LinearFactor> factors) {
    if (constant.is_zero()) throw DomainError("classification of the zero polynomial");
    std::vector<Digits> roots;
    for (const auto& lf : factors) {
        // A canonical factor with a root outside Z_p has p | a and p !| b,
        // so it contributes valuation 0 everywhere.
        const Rational r = lf.root();
        if (is_padic_integer(r, p)) roots.push_back(digits_from_zero(r, p, node.level()));
    }
    return classify_by_digits(node, valuation(constant, p), roots);
}

ValuationTree build_analytic_tree(const FactoredPolynomial& f, const Prime& p, std::size_t depth) {
    if (f.is_zero()) throw DomainError("valuation tree of the zero polynomial");
    if (!f.residual_is_constant()) {
        throw EngineMismatch("analytic engine needs a product of linear factors; " + f.to_string() +
                             " has residual " + f.residual.to_string() + " (use the partial engine)");
    }
    const auto factors = zp_factors(f, p);
    const Valuation base = valuation(f.constant, p);
    std::vector<Digits> roots;
    for (const auto& lf : factors) roots.push_back(digits_from_zero(lf.root(), p, depth + kWitnessPrecision));
    const ClearedPolynomial F(expand(f), p);

    ValuationTree tree{p, depth, f.to_string(), "analytic", {}};
    return grow_tree(std::move(tree), [&](const NodeId& id) {
        TreeNode node{classify_by_digits(id, base, roots), std::nullopt};
        if (node.status.is_nonterminating()) {
            std::vector<const Digits*> paths;
            for (const auto& r : roots) {
                if (id.is_prefix_of(r)) paths.push_back(&r);
            }
            node.witness = find_witness(F, p, id, paths);
        }
        return node;
    });
}

std::size_t infinite_branch_count(const FactoredPolynomial& f, const Prime& p) {
    if (!f.residual_is_constant()) throw EngineMismatch("infinite_branch_count needs a constant residual");
    std::vector<Rational> roots;
    for (const auto& lf : zp_factors(f, p)) {
        Rational r = lf.root();
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(std::move(r));
    }
    return roots.size();
}

// ---------------------------------------------------------------------------
// Empirical engine

namespace {

class EmpiricalClassifier {
public:
    EmpiricalClassifier(const Polynomial& f, const Prime& p, std::span<const Integer> hints)
        : F_(f, p), p_(p), base_(p.small()), offsets_(probe_offsets(base_)), hints_(hints.begin(), hints.end()) {}

    struct Result {
        NodeStatus status;
        std::optional<Witness> witness;
        Sample sample;
    };

    Result classify(const NodeId& node, std::size_t extra) const {
        const Integer label = node.label(p_);
        const Integer modulus = power(p_, node.level());

        if (auto w = congruence_certificate(label, node.level())) {
            return {NodeStatus::terminating(*w - F_.shift), std::nullopt, {label, *w}};
        }

        std::vector<Sample> samples;
        for (unsigned long t : offsets_) {
            const Integer n = label + modulus * t;
            samples.push_back({n, F_.raw(n, p_)});
        }
        for (const auto& h : hints_) {
            if (in_node(h, label, modulus)) samples.push_back({h, F_.raw(h, p_)});
        }
        if (auto w = first_distinct(samples)) return {NodeStatus::nonterminating(), w, samples.front()};
        if (extra == 0) return {NodeStatus::unresolved(), std::nullopt, samples.front()};

        std::optional<Valuation> common;
        bool all_terminating = true;
        for (unsigned long d = 0; d < base_; ++d) {
            Result child = classify(node.child(Integer(d)), extra - 1);
            if (child.status.is_nonterminating()) return {child.status, child.witness, samples.front()};
            samples.push_back(child.sample);
            if (auto w = first_distinct(samples)) return {NodeStatus::nonterminating(), w, samples.front()};
            if (child.status.is_terminating()) {
                common = child.status.valuation();
            } else {
                all_terminating = false;
            }
        }
        if (all_terminating && common) return {NodeStatus::terminating(*common), std::nullopt, samples.front()};
        return {NodeStatus::unresolved(), std::nullopt, samples.front()};
    }

private:
    // F(c + p^k n) = sum g_j n^j. If v(g_0) < v(g_j) for every j >= 1, every
    // member of the node has valuation v(g_0).
    std::optional<Valuation> congruence_certificate(const Integer& label, std::size_t level) const {
        std::vector<Integer> a = F_.coefficients;
        const std::size_t d = a.size() - 1;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = d; j-- > i;) a[j] += label * a[j + 1];
        }
        const Valuation constant_term = valuation(a[0], p_);
        if (constant_term.is_infinite()) return std::nullopt;
        for (std::size_t j = 1; j <= d; ++j) {
            const Valuation vj = valuation(a[j], p_) + Valuation::finite(static_cast<std::int64_t>(j * level));
            if (vj <= constant_term) return std::nullopt;
        }
        return constant_term;
    }

    ClearedPolynomial F_;
    Prime p_;
    unsigned long base_;
    std::vector<unsigned long> offsets_;
    std::vector<Integer> hints_;
};

/// Truncations of the rational Z_p roots of f, used as probe points.
std::vector<Integer> root_hints(const Polynomial& f, const Prime& p, std::size_t precision) {
    std::vector<Integer> out;
    if (f.degree() < 1) return out;
    for (const auto& r : rational_roots(f)) {
        if (!is_padic_integer(r, p)) continue;
        if (r.is_integer() && r.sign() >= 0) out.push_back(r.numerator());
        out.push_back(residue(r, p, precision));
    }
    return out;
}

}  // namespace

EmpiricalVerdict classify_node_empirical(const Polynomial& f, const Prime& p, const NodeId& node,
                                         std::size_t max_extra_depth, std::span<const Integer> probe_hints) {
    if (f.is_zero()) throw DomainError("valuation tree of the zero polynomial");
    EmpiricalClassifier classifier(f, p, probe_hints);
    auto r = classifier.classify(node, max_extra_depth);
    return {r.status, r.witness};
}

ValuationTree build_empirical_tree(const Polynomial& f, const Prime& p, std::size_t depth, std::size_t max_extra_depth) {
    if (f.is_zero()) throw DomainError("valuation tree of the zero polynomial");
    const auto hints = root_hints(f, p, depth + max_extra_depth + 2);
    const EmpiricalClassifier classifier(f, p, hints);
    ValuationTree tree{p, depth, f.to_string(), "empirical", {}};
    return grow_tree(std::move(tree), [&](const NodeId& id) {
        auto r = classifier.classify(id, max_extra_depth);
        return TreeNode{r.status, r.witness};
    });
}

// ---------------------------------------------------------------------------
// Partial engine

ValuationTree build_partial_tree(const FactoredPolynomial& f, const Prime& p, std::size_t depth,
                                 std::size_t root_depth, std::size_t max_extra_depth) {
    if (f.is_zero()) throw DomainError("valuation tree of the zero polynomial");
    const std::size_t precision = std::max(depth, root_depth) + kWitnessPrecision;

    const auto linear = zp_factors(f, p);
    std::vector<Digits> linear_roots;
    for (const auto& lf : linear) linear_roots.push_back(digits_from_zero(lf.root(), p, precision));

    std::vector<Digits> residual_roots;
    std::vector<Integer> hints;
    if (!f.residual_is_constant()) {
        for (auto& prefix : zp_root_prefixes(f.residual, p, root_depth)) {
            hints.push_back(truncation_value(prefix.digits, p));
            if (prefix.certified) {
                residual_roots.push_back(extend_certified(f.residual, prefix, precision - root_depth).digits);
            }
        }
    }

    const Valuation base = valuation(f.constant, p);
    const ClearedPolynomial F(expand(f), p);
    const EmpiricalClassifier residual_classifier(f.residual, p, hints);

    ValuationTree tree{p, depth, f.to_string(), "partial", {}};
    return grow_tree(std::move(tree), [&](const NodeId& id) {
        std::vector<const Digits*> paths;
        for (const auto& r : linear_roots) {
            if (id.is_prefix_of(r)) paths.push_back(&r);
        }
        for (const auto& r : residual_roots) {
            if (id.is_prefix_of(r)) paths.push_back(&r);
        }
        if (!paths.empty()) return TreeNode{NodeStatus::nonterminating(), find_witness(F, p, id, paths)};

        // Off every root path the linear part has a fixed valuation, so the
        // product behaves exactly like the residual shifted by that amount.
        const NodeStatus lin = classify_by_digits(id, base, linear_roots);
        auto r = residual_classifier.classify(id, max_extra_depth);
        if (r.status.is_terminating()) {
            return TreeNode{NodeStatus::terminating(lin.valuation() + r.status.valuation()), std::nullopt};
        }
        return TreeNode{r.status, r.witness};
    });
}

// ---------------------------------------------------------------------------
// Diffing

TreeDiff diff_trees(const ValuationTree& first, const ValuationTree& second) {
    if (!(first.prime == second.prime)) throw DomainError("cannot diff trees over different primes");
    const std::size_t depth = std::min(first.depth, second.depth);
    TreeDiff out;
    for (const auto& [id, node] : first.nodes) {
        if (id.level() > depth) continue;
        const TreeNode* other = second.find(id);
        if (!other) continue;
        if (node.status.is_unresolved() || other->status.is_unresolved()) {
            out.incomparable.push_back({id, node.status, other->status});
        } else if (node.status != other->status) {
            out.disagreements.push_back({id, node.status, other->status});
        }
    }
    return out;
}

}  // namespace padictree
