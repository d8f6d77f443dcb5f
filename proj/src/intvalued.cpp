#include "ivp/intvalued.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ivp/error.hpp"

namespace ivp {

namespace {

std::size_t degree_of(const RatPoly& f) { return f.degree() < 0 ? 0 : static_cast<std::size_t>(f.degree()); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

using ExponentTable = std::map<Integer, std::vector<std::uint64_t>>;

ExponentTable exponents_for(const Integer& d, const SubsetSpec& spec, std::size_t k) {
    ExponentTable table;
    if (d > 1)
        for (const auto& p : prime_divisors(d)) table.emplace(p, factorial_exponents(spec, p, k));
    return table;
}

// Witness preference: b_r*c_s a p-unit first (smallest rhs), then the
// larger prime, then lexicographic (r, s).
bool preferred(const Witness& a, const Witness& b) {
    if (a.rhs_exponent != b.rhs_exponent) return a.rhs_exponent < b.rhs_exponent;
    if (a.p != b.p) return a.p > b.p;
    return std::pair(a.r, a.s) < std::pair(b.r, b.s);
}

std::optional<Witness> search_witness(const Integer& d, const NewtonForm& b, const NewtonForm& c,
                                      const ExponentTable& table) {
    std::optional<Witness> best;
    for (const auto& [p, e] : table) {
        const auto vd = static_cast<std::int64_t>(valuation(d, p).value());
        for (std::size_t r = 0; r < b.coefficients.size(); ++r) {
            const Valuation vb = valuation(b.coefficients[r], p);
            if (vb.is_infinite()) continue;
            for (std::size_t s = 0; s < c.coefficients.size(); ++s) {
                const Valuation vc = valuation(c.coefficients[s], p);
                if (vc.is_infinite()) continue;
                const std::int64_t lhs = vd - static_cast<std::int64_t>(e.at(r)) - static_cast<std::int64_t>(e.at(s));
                const Valuation rhs = vb + vc;
                if (lhs <= 0 || static_cast<std::uint64_t>(lhs) <= rhs.value()) continue;
                Witness w{p, r, s, lhs, rhs, b.coefficients[r], c.coefficients[s]};
                if (!best || preferred(w, *best)) best = std::move(w);
            }
        }
    }
    return best;
}

} // namespace

MembershipVerdict is_integer_valued(const RatPoly& f, const SubsetSpec& spec) {
    if (f.denominator() == 1) return {true, std::nullopt};
    const auto nodes = dk_ordering(spec, f.denominator(), degree_of(f)).elements;
    for (const auto& a : nodes)
        if (!is_integral(f(a))) return {false, a};
    return {true, std::nullopt};
}

MembershipVerdict is_integer_valued_newton(const RatPoly& f, const SubsetSpec& spec) {
    const Integer& d = f.denominator();
    if (d == 1) return {true, std::nullopt};
    const std::size_t k = degree_of(f);
    const auto nodes = dk_ordering(spec, d, k).elements;
    const NewtonForm nf = to_newton(f.numerator(), nodes);
    std::optional<std::size_t> first_failure;
    for (const auto& [p, e] : exponents_for(d, spec, k)) {
        const Valuation vd = valuation(d, p);
        for (std::size_t i = 0; i < nf.coefficients.size(); ++i) {
            if (valuation(nf.coefficients[i], p) + Valuation(e[i]) < vd) {
                first_failure = std::min(first_failure.value_or(i), i);
                break;
            }
        }
    }
    if (f.numerator().is_zero()) return {true, std::nullopt};
    if (first_failure) return {false, nodes[*first_failure]};
    return {true, std::nullopt};
}

PrimitivityVerdict is_image_primitive(const RatPoly& f, const SubsetSpec& spec) {
    if (f.numerator().is_zero()) throw Error("the zero polynomial is not image primitive");
    if (!is_integer_valued(f, spec).member) throw Error("not integer-valued over " + spec.to_string());
    const std::size_t k = degree_of(f);
    const IntPoly& g = f.numerator();

    // A prime dividing every value of f divides k!_S or the content of g,
    // so a d_k-ordering for D = k!_S * content(g) is a test set for all of them.
    const Integer kfact = factorial(spec, k).integer();
    const Integer modulus_base = kfact * content(g);
    std::optional<Integer> offending;
    if (modulus_base > 1) {
        const auto nodes = dk_ordering(spec, modulus_base, k).elements;
        std::vector<Rational> values;
        for (const auto& a : nodes) values.push_back(f(a));
        for (const auto& p : prime_divisors(modulus_base)) {
            bool divides_all = std::all_of(values.begin(), values.end(), [&](const Rational& v) {
                auto e = valuation(v, p);
                return !e || *e >= 1;
            });
            if (divides_all) {
                offending = p;
                break;
            }
        }
    }

    const bool by_fixed_divisor = fixed_divisor(spec, g) == f.denominator();
    if (by_fixed_divisor != !offending.has_value())
        throw std::logic_error("image primitivity checks disagree for " + to_string(f));
    return {!offending.has_value(), offending};
}

std::optional<Witness> find_witness(const Integer& d, const NewtonForm& b, const NewtonForm& c,
                                    const SubsetSpec& spec, std::size_t k) {
    return search_witness(d, b, c, exponents_for(d, spec, k));
}

static void mark_primitivity(IrreducibilityReport& report, const PrimitivityVerdict& verdict) {
    report.image_primitive = verdict.primitive;
    if (verdict.primitive) return;
    report.constant_factor = verdict.offending_prime;
    report.verdict = Verdict::Reducible;
}

IrreducibilityReport irreducibility_report(const RatPoly& f, const SubsetSpec& spec) {
    if (f.degree() < 1) throw Error("constant polynomials are outside the scope of the irreducibility test");
    if (!is_integer_valued(f, spec).member) throw Error("not integer-valued over " + spec.to_string());
    const auto primitivity = is_image_primitive(f, spec);
    auto report = irreducibility_report(f, spec, dk_ordering(spec, f.denominator(), degree_of(f)).elements);
    mark_primitivity(report, primitivity);
    return report;
}

IrreducibilityReport irreducibility_report(const RatPoly& f, const SubsetSpec& spec, std::vector<Integer> nodes) {
    if (f.degree() < 1) throw Error("constant polynomials are outside the scope of the irreducibility test");
    const std::size_t k = degree_of(f);
    if (nodes.size() < k + 1) throw Error("need " + std::to_string(k + 1) + " nodes");
    IrreducibilityReport report;
    report.f = f;
    report.nodes = std::move(nodes);
    const auto table = exponents_for(f.denominator(), spec, k);
    for (auto& split : enumerate_two_factor_splits(f.numerator())) {
        SplitAnalysis analysis{std::move(split), {}, {}, std::nullopt};
        analysis.g1_newton = to_newton(analysis.split.g1, report.nodes);
        analysis.g2_newton = to_newton(analysis.split.g2, report.nodes);
        analysis.witness = search_witness(f.denominator(), analysis.g1_newton, analysis.g2_newton, table);
        if (!analysis.witness && !report.reducible_split) report.reducible_split = report.splits.size();
        report.splits.push_back(std::move(analysis));
    }
    report.verdict = report.reducible_split ? Verdict::Reducible : Verdict::Irreducible;
    return report;
}

IrreducibilityReport formal_irreducibility_report(const RatPoly& f, const SubsetSpec& spec) {
    if (f.degree() < 1) throw Error("constant polynomials are outside the scope of the irreducibility test");
    auto report = irreducibility_report(f, spec, dk_ordering(spec, f.denominator(), degree_of(f)).elements);
    report.preconditions_checked = false;
    report.integer_valued = is_integer_valued(f, spec).member;
    report.image_primitive = std::nullopt;
    if (report.integer_valued) mark_primitivity(report, is_image_primitive(f, spec));
    return report;
}

bool is_irreducible(const RatPoly& f, const SubsetSpec& spec) {
    if (f.denominator() != 1) return irreducibility_report(f, spec).verdict == Verdict::Irreducible;
    // Integer polynomials factor in Int(S,Z) exactly when they factor in Z[x].
    if (f.degree() < 1) throw Error("constant polynomials are outside the scope of the irreducibility test");
    if (!is_image_primitive(f, spec).primitive) return false;
    const Factorization fac = factor_over_integers(f.numerator());
    return fac.factors.size() == 1 && fac.factors.front().multiplicity == 1;
}

} // namespace ivp
