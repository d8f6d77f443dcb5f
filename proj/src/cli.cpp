#include "ivp/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivp/error.hpp"
#include "ivp/factorize.hpp"
#include "ivp/intvalued.hpp"
#include "ivp/oracle.hpp"
#include "ivp/orderings.hpp"

namespace ivp::cli {

namespace {

using json = nlohmann::ordered_json;

struct Context {
    std::ostringstream out;
    std::ostringstream err;
    bool color = false;
    bool as_json = false;
};

// Big integers travel as decimal strings in JSON.
json str(const Integer& n) { return n.get_str(); }

json str_list(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(str(x));
    return a;
}

std::string join(const std::vector<Integer>& v, const std::string& sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

std::string styled(const Context& ctx, const std::string& text, bool good) {
    if (!ctx.color) return text;
    return (good ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
}

json header(const std::string& command) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

void note_truncation(Context& ctx, const SubsetSpec& spec, json& j) {
    j["truncation_relative"] = spec.is_finite();
    if (spec.is_finite())
        ctx.err << "warning: results are relative to the finite set " << spec.to_string()
                << "; they say nothing about any infinite set it may stand in for\n";
}

void emit(Context& ctx, const json& j) { ctx.out << j.dump(2) << "\n"; }

Integer parse_int_arg(const std::string& text, const std::string& what) {
    auto v = parse_integer(text);
    if (!v) throw ParseError("expected an integer for " + what, 0);
    return *v;
}

std::vector<Integer> parse_node_list(const std::string& text) {
    std::vector<Integer> nodes;
    std::size_t pos = 0;
    if (text.empty()) return nodes;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        auto v = parse_integer(item);
        if (!v) throw ParseError("expected an integer node", pos);
        nodes.push_back(*v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return nodes;
}

json witness_json(const Witness& w) {
    json j;
    j["p"] = str(w.p);
    j["r"] = w.r;
    j["s"] = w.s;
    j["lhs_exponent"] = w.lhs_exponent;
    j["rhs_exponent"] = w.rhs_exponent.value();
    j["b_r"] = str(w.b_r);
    j["c_s"] = str(w.c_s);
    return j;
}

int cmd_p_ordering(Context& ctx, const std::string& set_text, const std::string& p_text, std::size_t k) {
    auto spec = parse_subset(set_text);
    Integer p = parse_int_arg(p_text, "--p");
    auto ord = p_ordering(spec, p, k);
    json j = header("p-ordering");
    j["set"] = spec.to_string();
    j["p"] = str(p);
    j["k"] = k;
    j["elements"] = str_list(ord.elements);
    j["p_sequence"] = ord.p_sequence;
    note_truncation(ctx, spec, j);
    if (ctx.as_json) {
        emit(ctx, j);
    } else {
        ctx.out << p << "-ordering of " << spec.to_string() << " (k = " << k << ")\n";
        ctx.out << "  elements:   " << join(ord.elements) << "\n  p-sequence:";
        for (auto e : ord.p_sequence) ctx.out << " " << e;
        ctx.out << "\n";
    }
    return kAffirmative;
}

int cmd_factorial(Context& ctx, const std::string& set_text, std::size_t k) {
    auto spec = parse_subset(set_text);
    auto fact = factorial(spec, k);
    json j = header("factorial");
    j["set"] = spec.to_string();
    j["k"] = k;
    j["value"] = str(fact.integer());
    json factors = json::array();
    for (const auto& f : fact.value.factors) factors.push_back({{"prime", str(f.prime)}, {"exponent", f.exponent}});
    j["factors"] = factors;
    note_truncation(ctx, spec, j);
    if (ctx.as_json) emit(ctx, j);
    else ctx.out << k << "!_S = " << fact.integer() << " = " << fact.value.to_string() << "\n";
    return kAffirmative;
}

int cmd_dk_ordering(Context& ctx, const std::string& set_text, const std::string& d_text, std::size_t k) {
    auto spec = parse_subset(set_text);
    auto dk = dk_ordering(spec, parse_int_arg(d_text, "--d"), k);
    json j = header("dk-ordering");
    j["set"] = spec.to_string();
    j["d"] = str(dk.d);
    j["k"] = k;
    j["nodes"] = str_list(dk.elements);
    json moduli = json::array();
    for (const auto& m : dk.moduli)
        moduli.push_back({{"prime", str(m.prime)}, {"exponent", m.exponent}, {"modulus", str(m.modulus)}});
    j["moduli"] = moduli;
    note_truncation(ctx, spec, j);
    if (ctx.as_json) {
        emit(ctx, j);
    } else {
        ctx.out << "d_k-ordering (d = " << dk.d << ", k = " << k << "): " << join(dk.elements) << "\n";
        for (const auto& m : dk.moduli) ctx.out << "  mod " << m.prime << "^" << m.exponent << " = " << m.modulus << "\n";
    }
    return kAffirmative;
}

int cmd_mu(Context& ctx, const std::string& set_text, const std::string& d_text, const std::string& p_text,
           std::size_t i) {
    auto spec = parse_subset(set_text);
    Integer d = parse_int_arg(d_text, "--d"), p = parse_int_arg(p_text, "--p");
    Integer value = mu(spec, d, p, i);
    json j = header("mu");
    j["set"] = spec.to_string();
    j["d"] = str(d);
    j["p"] = str(p);
    j["i"] = i;
    j["exponent"] = valuation(value, p).value();
    j["value"] = str(value);
    note_truncation(ctx, spec, j);
    if (ctx.as_json) emit(ctx, j);
    else ctx.out << "mu_" << i << "(" << d << ", " << p << ") = " << p << "^" << valuation(value, p).value() << " = " << value << "\n";
    return kAffirmative;
}

int cmd_fixed_divisor(Context& ctx, const std::string& set_text, const std::string& poly_text) {
    auto spec = parse_subset(set_text);
    auto f = parse_poly(poly_text);
    Integer value = fixed_divisor(spec, f.numerator());
    json j = header("fixed-divisor");
    j["set"] = spec.to_string();
    j["poly"] = to_string(f.numerator());
    j["value"] = str(value);
    note_truncation(ctx, spec, j);
    if (ctx.as_json) emit(ctx, j);
    else ctx.out << "d(S, " << to_string(f.numerator()) << ") = " << value << "\n";
    return kAffirmative;
}

int cmd_check_iv(Context& ctx, const std::string& set_text, const std::string& poly_text) {
    auto spec = parse_subset(set_text);
    auto f = parse_poly(poly_text);
    auto verdict = is_integer_valued(f, spec);
    json j = header("check-iv");
    j["set"] = spec.to_string();
    j["poly"] = to_string(f);
    j["member"] = verdict.member;
    j["failing_node"] = verdict.failing_node ? json(str(*verdict.failing_node)) : json(nullptr);
    note_truncation(ctx, spec, j);
    if (ctx.as_json) {
        emit(ctx, j);
    } else if (verdict.member) {
        ctx.out << styled(ctx, "integer-valued", true) << ": " << to_string(f) << " maps " << spec.to_string()
                << " into Z\n";
    } else {
        ctx.out << styled(ctx, "not integer-valued", false) << ": f(" << *verdict.failing_node
                << ") = " << f(*verdict.failing_node) << "\n";
    }
    return verdict.member ? kAffirmative : kNegative;
}

int cmd_check_primitive(Context& ctx, const std::string& set_text, const std::string& poly_text) {
    auto spec = parse_subset(set_text);
    auto f = parse_poly(poly_text);
    auto verdict = is_image_primitive(f, spec);
    json j = header("check-primitive");
    j["set"] = spec.to_string();
    j["poly"] = to_string(f);
    j["primitive"] = verdict.primitive;
    j["offending_prime"] = verdict.offending_prime ? json(str(*verdict.offending_prime)) : json(nullptr);
    note_truncation(ctx, spec, j);
    if (ctx.as_json) {
        emit(ctx, j);
    } else if (verdict.primitive) {
        ctx.out << styled(ctx, "image primitive", true) << ": no prime divides every value\n";
    } else {
        ctx.out << styled(ctx, "not image primitive", false) << ": " << *verdict.offending_prime
                << " divides f(a) for every a in S\n";
    }
    return verdict.primitive ? kAffirmative : kNegative;
}

int cmd_irreducible(Context& ctx, const std::string& set_text, const std::string& poly_text, bool run_oracle,
                    bool formal) {
    auto spec = parse_subset(set_text);
    auto f = parse_poly(poly_text);
    auto report = formal ? formal_irreducibility_report(f, spec) : irreducibility_report(f, spec);
    const bool irreducible = report.verdict == Verdict::Irreducible;

    std::optional<bool> oracle_reducible;
    if (run_oracle) oracle_reducible = oracle::brute_reducibility(f, spec);

    json j = header("irreducible");
    j["set"] = spec.to_string();
    j["poly"] = to_string(f);
    j["numerator"] = to_string(f.numerator());
    j["denominator"] = str(f.denominator());
    j["degree"] = f.degree();
    j["nodes"] = str_list(report.nodes);
    j["verdict"] = irreducible ? "irreducible" : "reducible";
    json splits = json::array();
    for (const auto& s : report.splits) {
        json e;
        e["g1"] = to_string(s.split.g1);
        e["g2"] = to_string(s.split.g2);
        e["b"] = str_list(s.g1_newton.coefficients);
        e["c"] = str_list(s.g2_newton.coefficients);
        e["witness"] = s.witness ? witness_json(*s.witness) : json(nullptr);
        splits.push_back(e);
    }
    j["splits"] = splits;
    j["constant_factor"] = report.constant_factor ? json(str(*report.constant_factor)) : json(nullptr);
    j["reducible_split"] = report.reducible_split ? json(*report.reducible_split) : json(nullptr);
    j["preconditions"] = {{"checked", report.preconditions_checked},
                          {"integer_valued", report.integer_valued},
                          {"image_primitive", report.image_primitive ? json(*report.image_primitive) : json(nullptr)}};
    if (oracle_reducible) j["oracle"] = {{"reducible", *oracle_reducible}, {"agrees", *oracle_reducible != irreducible}};
    note_truncation(ctx, spec, j);
    if (!report.integer_valued)
        ctx.err << "warning: f is not integer-valued over " << spec.to_string()
                << "; the verdict only records whether every split carries a witness\n";

    if (ctx.as_json) {
        emit(ctx, j);
    } else {
        ctx.out << "f = " << to_string(f) << " over " << spec.to_string() << "\n";
        ctx.out << "d_k-ordering nodes (d = " << f.denominator() << ", k = " << f.degree() << "): " << join(report.nodes)
                << "\n";
        if (report.splits.empty()) ctx.out << "numerator admits no factorization into nonconstant integer polynomials\n";
        for (std::size_t i = 0; i < report.splits.size(); ++i) {
            const auto& s = report.splits[i];
            ctx.out << "split " << i + 1 << ": g1 = " << to_string(s.split.g1) << ", g2 = " << to_string(s.split.g2)
                    << "\n";
            ctx.out << "  b = [" << join(s.g1_newton.coefficients, ", ") << "]\n";
            ctx.out << "  c = [" << join(s.g2_newton.coefficients, ", ") << "]\n";
            if (s.witness) {
                const auto& w = *s.witness;
                ctx.out << "  witness: p = " << w.p << ", r = " << w.r << ", s = " << w.s << ": v_p(d) - v_p(" << w.r
                        << "!_S) - v_p(" << w.s << "!_S) = " << w.lhs_exponent << " > " << w.rhs_exponent.value()
                        << " = v_p(b_r c_s)\n";
            } else {
                ctx.out << "  no witness"
                        << (report.integer_valued ? ": f = (g1/d1)(g2/d2) with both factors integer-valued for some d1*d2 = d"
                                                  : "")
                        << "\n";
            }
        }
        if (report.constant_factor)
            ctx.out << "constant factor: " << *report.constant_factor << " divides every value, so f = "
                    << *report.constant_factor << " * (f/" << *report.constant_factor << ") in Int(S,Z)\n";
        ctx.out << "verdict: " << styled(ctx, irreducible ? "IRREDUCIBLE" : "REDUCIBLE", irreducible) << "\n";
        if (oracle_reducible)
            ctx.out << "oracle: " << (*oracle_reducible ? "reducible" : "irreducible")
                    << (*oracle_reducible != irreducible ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    if (oracle_reducible && *oracle_reducible == irreducible) {
        ctx.err << "internal error: brute-force oracle disagrees with the witness verdict\n";
        return kInternalError;
    }
    return irreducible ? kAffirmative : kNegative;
}

int cmd_newton(Context& ctx, const std::string& poly_text, const std::string& nodes_text) {
    auto f = parse_poly(poly_text);
    auto nodes = parse_node_list(nodes_text);
    auto nf = to_newton(f.numerator(), nodes);
    json j = header("newton");
    j["poly"] = to_string(f);
    j["nodes"] = str_list(nf.nodes);
    j["coefficients"] = str_list(nf.coefficients);
    j["denominator"] = str(f.denominator());
    if (ctx.as_json) {
        emit(ctx, j);
    } else {
        ctx.out << "nodes:        " << join(nf.nodes) << "\n";
        ctx.out << "coefficients: " << join(nf.coefficients) << "\n";
        if (f.denominator() != 1) ctx.out << "denominator:  " << f.denominator() << "\n";
    }
    return kAffirmative;
}

int cmd_factor(Context& ctx, const std::string& poly_text) {
    auto f = parse_poly(poly_text);
    auto fac = factor_over_integers(f.numerator());
    json j = header("factor");
    j["poly"] = to_string(f.numerator());
    j["sign"] = fac.sign;
    j["content"] = str(fac.content);
    json factors = json::array();
    for (const auto& p : fac.factors) factors.push_back({{"factor", to_string(p.factor)}, {"multiplicity", p.multiplicity}});
    j["factors"] = factors;
    if (f.denominator() != 1) j["denominator"] = str(f.denominator());
    if (ctx.as_json) {
        emit(ctx, j);
    } else {
        ctx.out << (fac.sign < 0 ? "-" : "") << fac.content;
        for (const auto& p : fac.factors) {
            ctx.out << " * (" << to_string(p.factor) << ")";
            if (p.multiplicity > 1) ctx.out << "^" << p.multiplicity;
        }
        if (f.denominator() != 1) ctx.out << " / " << f.denominator();
        ctx.out << "\n";
    }
    return kAffirmative;
}

} // namespace

int exit_code_for(std::exception_ptr error) {
    try {
        std::rethrow_exception(error);
    } catch (const CLI::Error&) {
        return kUsageError;
    } catch (const Error&) {
        return kUsageError;
    } catch (...) {
        return kInternalError;
    }
}

CommandResult run(const std::vector<std::string>& args, const Options& options) {
    Context ctx;
    ctx.color = options.color;

    CLI::App app{"Integer-valued polynomials: Bhargava factorials, d_k-orderings and irreducibility", "ivp"};
    app.require_subcommand(1);
    std::string set_text, poly_text, p_text, d_text, nodes_text;
    std::size_t k = 0, i = 0;
    bool run_oracle = false, formal = false;
    std::function<int()> action;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", ctx.as_json, "emit JSON"); };

    auto* sub = app.add_subcommand("p-ordering", "p-ordering and p-sequence of S");
    sub->add_option("--set", set_text, "subset of Z")->required();
    sub->add_option("--p", p_text, "prime")->required();
    sub->add_option("--k", k, "last index")->required();
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_p_ordering(ctx, set_text, p_text, k); }; });

    sub = app.add_subcommand("factorial", "generalized factorial k!_S");
    sub->add_option("--set", set_text, "subset of Z")->required();
    sub->add_option("--k", k, "index")->required();
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_factorial(ctx, set_text, k); }; });

    sub = app.add_subcommand("dk-ordering", "d_k-ordering nodes and moduli");
    sub->add_option("--set", set_text, "subset of Z")->required();
    sub->add_option("--d", d_text, "d >= 0")->required();
    sub->add_option("--k", k, "last index")->required();
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_dk_ordering(ctx, set_text, d_text, k); }; });

    sub = app.add_subcommand("mu", "mu_i(d,p) = p^(v_p(d) - v_p(i!_S))");
    sub->add_option("--set", set_text, "subset of Z")->required();
    sub->add_option("--d", d_text, "d >= 2")->required();
    sub->add_option("--p", p_text, "prime")->required();
    sub->add_option("--i", i, "index")->required();
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_mu(ctx, set_text, d_text, p_text, i); }; });

    sub = app.add_subcommand("fixed-divisor", "fixed divisor d(S,g) of the numerator");
    sub->add_option("--set", set_text, "subset of Z")->required();
    sub->add_option("--poly", poly_text, "polynomial")->required();
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_fixed_divisor(ctx, set_text, poly_text); }; });

    sub = app.add_subcommand("check-iv", "membership in Int(S,Z) (exit 0 member, 1 not)");
    sub->add_option("--set", set_text, "subset of Z")->required();
    sub->add_option("--poly", poly_text, "polynomial")->required();
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_check_iv(ctx, set_text, poly_text); }; });

    sub = app.add_subcommand("check-primitive", "image primitivity (exit 0 primitive, 1 not)");
    sub->add_option("--set", set_text, "subset of Z")->required();
    sub->add_option("--poly", poly_text, "polynomial")->required();
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_check_primitive(ctx, set_text, poly_text); }; });

    sub = app.add_subcommand("irreducible", "irreducibility in Int(S,Z) with witnesses (exit 0 irreducible, 1 reducible)");
    sub->add_option("--set", set_text, "subset of Z")->required();
    sub->add_option("--poly", poly_text, "polynomial")->required();
    sub->add_flag("--oracle", run_oracle, "cross-check with the brute-force oracle; exit 3 on disagreement");
    sub->add_flag("--formal", formal, "skip the membership and primitivity preconditions and report them instead");
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_irreducible(ctx, set_text, poly_text, run_oracle, formal); }; });

    sub = app.add_subcommand("newton", "coefficients in the basis (x-a_0)...(x-a_{i-1})");
    sub->add_option("--poly", poly_text, "polynomial")->required();
    sub->add_option("--nodes", nodes_text, "comma-separated nodes")->required();
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_newton(ctx, poly_text, nodes_text); }; });

    sub = app.add_subcommand("factor", "factorization of the numerator in Z[x]");
    sub->add_option("--poly", poly_text, "polynomial")->required();
    add_json(sub);
    sub->callback([&] { action = [&] { return cmd_factor(ctx, poly_text); }; });

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        result.exit_code = app.exit(e, ctx.out, ctx.err) == 0 ? kAffirmative : kUsageError;
        result.out = ctx.out.str();
        result.err = ctx.err.str();
        return result;
    }

    try {
        result.exit_code = action();
    } catch (const std::exception& e) {
        result.exit_code = exit_code_for(std::current_exception());
        ctx.err << (result.exit_code == kUsageError ? "error: " : "internal error: ") << e.what() << "\n";
    }
    result.out = ctx.out.str();
    result.err = ctx.err.str();
    return result;
}

} // namespace ivp::cli
