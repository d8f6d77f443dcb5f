#include "ivp/poly.hpp"

#include <algorithm>
#include <set>

#include "ivp/error.hpp"

namespace ivp {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::linear_root(const Integer& root) { return IntPoly(std::vector<Integer>{-root, 1}); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer IntPoly::operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    acc.canonicalize();
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Integer(static_cast<unsigned long>(i)));
    return IntPoly(std::move(d));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

Integer content(const IntPoly& g) {
    Integer c = 0;
    for (const auto& a : g.coefficients()) c = gcd(c, a);
    return c;
}

IntPoly primitive_part(const IntPoly& g) {
    if (g.is_zero()) return g;
    Integer c = content(g);
    if (g.leading() < 0) c = -c;
    return divide_coefficients(g, c);
}

IntPoly pow(const IntPoly& g, unsigned exponent) {
    IntPoly r = IntPoly::constant(1);
    for (unsigned i = 0; i < exponent; ++i) r *= g;
    return r;
}

IntPoly divide_coefficients(const IntPoly& g, const Integer& c) {
    std::vector<Integer> out = g.coefficients();
    for (auto& a : out) {
        if (!mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t())) throw Error("coefficient not divisible by " + c.get_str());
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    }
    return IntPoly(std::move(out));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error("division by the zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Integer> rem = a.coefficients();
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Integer& top = rem[i + db];
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * bc[j];
        quot[i] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const auto& bc = b.coefficients();
    const Integer& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        std::vector<Integer> ac = a.coefficients();
        const Integer top = ac.back();
        const std::size_t shift = ac.size() - bc.size();
        for (auto& c : ac) c *= lb;
        for (std::size_t j = 0; j < bc.size(); ++j) ac[shift + j] -= top * bc[j];
        a = IntPoly(std::move(ac));
    }
    return a;
}

} // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b) * content(b);
    if (b.is_zero()) return primitive_part(a) * content(a);
    Integer c = gcd(content(a), content(b));
    IntPoly x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return primitive_part(x) * c;
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    for (std::size_t i = ac.size(); i-- > 0;) {
        int c = mpz_cmpabs(ac[i].get_mpz_t(), bc[i].get_mpz_t());
        if (c != 0) return c < 0;
    }
    for (std::size_t i = ac.size(); i-- > 0;)
        if (ac[i] != bc[i]) return ac[i] < bc[i];
    return false;
}

RatPoly::RatPoly(IntPoly numerator, Integer denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw Error("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = gcd(content(num_), den_);
    if (g != 1) {
        num_ = divide_coefficients(num_, g);
        den_ /= g;
    }
}

Rational RatPoly::operator()(const Integer& x) const {
    Rational r(num_(x), den_);
    r.canonicalize();
    return r;
}

Rational eval(const RatPoly& f, const Integer& x) { return f(x); }

NewtonForm to_newton(const IntPoly& g, std::span<const Integer> nodes) {
    std::set<Integer> seen;
    for (const auto& a : nodes)
        if (!seen.insert(a).second) throw Error("duplicate Newton node " + a.get_str());
    NewtonForm nf;
    if (g.is_zero()) return nf;
    const auto k = static_cast<std::size_t>(g.degree());
    if (nodes.size() < k)
        throw Error("need at least " + std::to_string(k) + " nodes, got " + std::to_string(nodes.size()));
    nf.nodes.assign(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Integer> q = g.coefficients();
    for (std::size_t i = 0; i < k; ++i) {
        // q = (x - a_i) * q' + r  with r = q(a_i)
        const Integer& a = nf.nodes[i];
        std::vector<Integer> next(q.size() - 1);
        Integer carry = 0;
        for (std::size_t j = q.size(); j-- > 0;) {
            carry = carry * a + q[j];
            if (j > 0) next[j - 1] = carry;
        }
        nf.coefficients.push_back(carry);
        q = std::move(next);
    }
    nf.coefficients.push_back(q.front());
    return nf;
}

IntPoly from_newton(const NewtonForm& nf) {
    IntPoly acc;
    for (std::size_t i = nf.coefficients.size(); i-- > 0;) {
        if (i < nf.coefficients.size() - 1) acc *= IntPoly::linear_root(nf.nodes.at(i));
        acc += IntPoly::constant(nf.coefficients[i]);
    }
    return acc;
}

IntPoly falling_product(std::span<const Integer> nodes, std::size_t r) {
    if (r > nodes.size()) throw Error("not enough nodes for F_" + std::to_string(r));
    IntPoly acc = IntPoly::constant(1);
    for (std::size_t j = 0; j < r; ++j) acc *= IntPoly::linear_root(nodes[j]);
    return acc;
}

std::string to_string(const IntPoly& g, TermOrder order) {
    if (g.is_zero()) return "0";
    std::string out;
    const auto& c = g.coefficients();
    auto emit = [&](std::size_t i) {
        if (c[i] == 0) return;
        Integer mag = abs(c[i]);
        if (c[i] < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    };
    if (order == TermOrder::Descending)
        for (std::size_t i = c.size(); i-- > 0;) emit(i);
    else
        for (std::size_t i = 0; i < c.size(); ++i) emit(i);
    return out;
}

std::string to_string(const RatPoly& f, TermOrder order) {
    if (f.denominator() == 1) return to_string(f.numerator(), order);
    return "(" + to_string(f.numerator(), order) + ")/" + f.denominator().get_str();
}

std::string to_coeffs_string(const RatPoly& f) {
    std::string out = "coeffs:";
    const auto& c = f.numerator().coefficients();
    if (c.empty()) out += "0";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i].get_str();
    }
    if (f.denominator() != 1) out += "/" + f.denominator().get_str();
    return out;
}

} // namespace ivp
