#include "padictree/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "padictree/expansion.hpp"
#include "padictree/render.hpp"
#include "padictree/tree.hpp"
#include "padictree/zp_roots.hpp"

namespace padictree::cli {

namespace {

Prime parse_prime(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw InvalidPrime("'" + text + "' is not a prime");
    }
    return Prime(Integer(text));
}

std::string digit_list(const Digits& digits, bool open_ended) {
    std::string out = "[";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ',';
        out += digits[i].get_str();
    }
    if (open_ended) out += ",...";
    return out + "]";
}

std::string expansion_text(const DigitExpansion& e) {
    if (e.digits.empty()) return "0";
    std::string out;
    const std::string p = e.prime.value().get_str();
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
        if (i) out += " + ";
        out += e.digits[i].get_str() + "·" + p + "^" + std::to_string(e.start_exponent + static_cast<std::int64_t>(i));
    }
    return out;
}

ValuationTree build_tree(const std::string& engine, const FactoredPolynomial& f, const Prime& p, const RenderConfig& config) {
    if (engine == "analytic") return build_analytic_tree(f, p, config.depth);
    if (engine == "empirical") return build_empirical_tree(expand(f), p, config.depth, config.max_extra_depth);
    if (engine == "partial") return build_partial_tree(f, p, config.depth, config.depth + 4, config.max_extra_depth);
    if (f.residual_is_constant()) return build_analytic_tree(f, p, config.depth);
    return build_partial_tree(f, p, config.depth, config.depth + 4, config.max_extra_depth);
}

void require_nonzero(const FactoredPolynomial& f) {
    if (f.is_zero()) throw DomainError("the zero polynomial has no valuation tree");
}

int cmd_val(const std::string& expr, const std::string& at, const std::string& prime, std::ostream& out) {
    const Polynomial f = parse_polynomial(expr);
    const Prime p = parse_prime(prime);
    const Rational n = Rational::parse(at);
    out << valuation(f.evaluate(n), p) << "\n";
    return kOk;
}

int cmd_expand(const std::string& value, const std::string& prime, std::size_t count, std::ostream& out) {
    const Rational r = Rational::parse(value);
    const Prime p = parse_prime(prime);
    out << expansion_text(expand(r, p, count)) << "\n";
    return kOk;
}

int cmd_tree(const std::string& expr, const std::string& prime, const std::string& engine, const RenderConfig& config,
             std::ostream& out) {
    const FactoredPolynomial f = parse(expr);
    const Prime p = parse_prime(prime);
    require_nonzero(f);
    out << render(make_document(build_tree(engine, f, p, config)), config);
    return kOk;
}

int cmd_diff(const std::string& expr, const std::string& prime, const RenderConfig& config, std::ostream& out) {
    const FactoredPolynomial f = parse(expr);
    const Prime p = parse_prime(prime);
    require_nonzero(f);
    const auto analytic = build_analytic_tree(f, p, config.depth);
    const auto empirical = build_empirical_tree(expand(f), p, config.depth, config.max_extra_depth);
    const auto diff = diff_trees(analytic, empirical);
    out << "analytic vs empirical for " << f.to_string() << ", p = " << p.value().get_str() << ", depth "
        << config.depth << "\n";
    for (const auto& d : diff.disagreements) {
        out << "  disagree " << d.node.to_string() << ": analytic " << d.first.glyph() << ", empirical "
            << d.second.glyph() << "\n";
    }
    for (const auto& d : diff.incomparable) {
        out << "  incomparable " << d.node.to_string() << ": analytic " << d.first.glyph() << ", empirical "
            << d.second.glyph() << "\n";
    }
    out << diff.disagreements.size() << " disagreements, " << diff.incomparable.size() << " incomparable\n";
    return diff.disagreements.empty() ? kOk : kDisagreement;
}

int cmd_roots(const std::string& expr, const std::string& prime, std::size_t depth, std::ostream& out) {
    const FactoredPolynomial f = parse(expr);
    const Prime p = parse_prime(prime);
    require_nonzero(f);
    const std::string zp = "Z_" + p.value().get_str();

    out << "rational roots:\n";
    std::vector<Rational> seen;
    for (const auto& lf : f.linear_factors) {
        const Rational r = lf.root();
        if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
        seen.push_back(r);
        out << "  " << r << ": ";
        if (is_padic_integer(r, p)) {
            out << "in " << zp << ", digits " << digit_list(digits_from_zero(r, p, depth), true) << "\n";
        } else {
            out << "not in " << zp << "\n";
        }
    }
    if (seen.empty()) out << "  none\n";

    out << "residual root prefixes:\n";
    std::size_t shown = 0;
    if (!f.residual_is_constant()) {
        for (const auto& prefix : zp_root_prefixes(f.residual, p, depth)) {
            out << "  " << digit_list(prefix.digits, false) << (prefix.certified ? " certified" : " uncertified")
                << "\n";
            ++shown;
        }
    }
    if (shown == 0) out << "  none\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-adic valuations, digit expansions and valuation trees of polynomial sequences", "padictree"};
    app.require_subcommand(1);

    std::string expr, prime, at, value, engine = "auto", format = "ascii";
    std::size_t digits = 5;
    std::size_t depth = 5;
    std::size_t extra = 4;
    bool no_labels = false;

    auto* val = app.add_subcommand("val", "valuation of f(n)");
    val->add_option("expr", expr, "polynomial in n")->required();
    val->add_option("--at", at, "the integer n")->required()->allow_extra_args(false);
    val->add_option("-p,--prime", prime, "prime")->required();

    auto* exp = app.add_subcommand("expand", "p-adic digit expansion of a rational");
    exp->add_option("rational", value, "a, -a or a/b")->required();
    exp->add_option("-p,--prime", prime, "prime")->required();
    exp->add_option("--digits", digits, "number of digits")->check(CLI::PositiveNumber);

    auto* tree = app.add_subcommand("tree", "build and render a valuation tree");
    tree->add_option("expr", expr, "polynomial in n")->required();
    tree->add_option("-p,--prime", prime, "prime")->required();
    tree->add_option("--engine", engine, "auto|analytic|empirical|partial")
        ->check(CLI::IsMember({"auto", "analytic", "empirical", "partial"}));
    tree->add_option("--depth", depth, "deepest level to materialize")->check(CLI::PositiveNumber);
    tree->add_option("--format", format, "ascii|dot|json|latex")->check(CLI::IsMember({"ascii", "dot", "json", "latex"}));
    tree->add_option("--extra-depth", extra, "look-ahead levels for empirical certificates");
    tree->add_flag("--no-labels", no_labels, "omit branch labels");

    auto* diff = app.add_subcommand("diff", "compare the analytic and empirical trees");
    diff->add_option("expr", expr, "polynomial in n")->required();
    diff->add_option("-p,--prime", prime, "prime")->required();
    diff->add_option("--depth", depth, "deepest level")->check(CLI::PositiveNumber);
    diff->add_option("--extra-depth", extra, "look-ahead levels for empirical certificates");

    auto* roots = app.add_subcommand("roots", "rational roots and Z_p root prefixes");
    roots->add_option("expr", expr, "polynomial in n")->required();
    roots->add_option("-p,--prime", prime, "prime")->required();
    roots->add_option("--depth", depth, "number of digits")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kFailure;
    }

    RenderConfig config;
    config.format = parse_format(format);
    config.depth = depth;
    config.max_extra_depth = extra;
    config.show_branch_labels = !no_labels;

    try {
        if (*val) return cmd_val(expr, at, prime, out);
        if (*exp) return cmd_expand(value, prime, digits, out);
        if (*tree) return cmd_tree(expr, prime, engine, config, out);
        if (*diff) return cmd_diff(expr, prime, config, out);
        if (*roots) return cmd_roots(expr, prime, depth, out);
    } catch (const padictree::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const InvalidPrime& e) {
        err << "invalid prime: " << e.what() << "\n";
        return kBadPrime;
    } catch (const EngineMismatch& e) {
        err << "engine mismatch: " << e.what() << "\n";
        return kEngineMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}

}  // namespace padictree::cli
