#include "ivp/sets.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "ivp/error.hpp"

namespace ivp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void sort_and_check_distinct(std::vector<Integer>& v) {
    if (v.empty()) throw Error("subset must be nonempty");
    std::sort(v.begin(), v.end());
    auto dup = std::adjacent_find(v.begin(), v.end());
    if (dup != v.end()) throw Error("duplicate element " + dup->get_str());
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

const std::vector<Integer> kNoElements;

} // namespace

SubsetSpec SubsetSpec::integers() { return SubsetSpec(Integers{}); }

SubsetSpec SubsetSpec::progression(Integer step, Integer offset) {
    if (step == 0) throw Error("progression step must be nonzero");
    return SubsetSpec(ArithmeticProgression{std::move(step), std::move(offset)});
}

SubsetSpec SubsetSpec::squares() { return SubsetSpec(Squares{}); }

SubsetSpec SubsetSpec::finite(std::vector<Integer> elements) {
    sort_and_check_distinct(elements);
    return SubsetSpec(FiniteList{std::move(elements)});
}

SubsetSpec SubsetSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open set file: " + path);
    std::vector<Integer> elements;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        auto value = parse_integer(view);
        if (!value)
            throw Error(path + ":" + std::to_string(lineno) + ": not an integer: '" + std::string(view) + "'");
        elements.push_back(*value);
    }
    sort_and_check_distinct(elements);
    return SubsetSpec(FileBacked{path, std::move(elements)});
}

bool SubsetSpec::is_structured() const {
    return std::holds_alternative<Integers>(variant_) ||
           std::holds_alternative<ArithmeticProgression>(variant_) ||
           std::holds_alternative<Squares>(variant_);
}

std::optional<std::size_t> SubsetSpec::size() const {
    if (is_structured()) return std::nullopt;
    return finite_elements().size();
}

const std::vector<Integer>& SubsetSpec::finite_elements() const {
    if (auto* f = std::get_if<FiniteList>(&variant_)) return f->elements;
    if (auto* f = std::get_if<FileBacked>(&variant_)) return f->elements;
    return kNoElements;
}

bool SubsetSpec::contains(const Integer& n) const {
    return std::visit(overloaded{
        [](const Integers&) { return true; },
        [&](const ArithmeticProgression& ap) { return mod(Integer(n - ap.offset), abs(ap.step)) == 0; },
        [&](const Squares&) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; },
        [&](const auto& list) { return std::binary_search(list.elements.begin(), list.elements.end(), n); },
    }, variant_);
}

std::string SubsetSpec::to_string() const {
    return std::visit(overloaded{
        [](const Integers&) { return std::string("Z"); },
        [](const ArithmeticProgression& ap) {
            std::string out = ap.step.get_str() + "Z";
            if (ap.offset > 0) out += "+" + ap.offset.get_str();
            else if (ap.offset < 0) out += ap.offset.get_str();
            return out;
        },
        [](const Squares&) { return std::string("squares"); },
        [](const FiniteList& list) {
            std::string out = "{";
            for (std::size_t i = 0; i < list.elements.size(); ++i) {
                if (i) out += ",";
                out += list.elements[i].get_str();
            }
            return out + "}";
        },
        [](const FileBacked& file) { return "file:" + file.path; },
    }, variant_);
}

std::vector<Integer> enumerate(const SubsetSpec& spec, std::size_t n) {
    std::vector<Integer> out;
    out.reserve(n);
    std::visit(overloaded{
        [&](const Integers&) {
            for (std::size_t i = 0; i < n; ++i) {
                // 0, 1, -1, 2, -2, ...
                long half = static_cast<long>((i + 1) / 2);
                out.emplace_back(i % 2 == 1 ? half : -half);
            }
        },
        [&](const ArithmeticProgression& ap) {
            for (std::size_t i = 0; i < n; ++i) out.push_back(ap.offset + ap.step * Integer(static_cast<unsigned long>(i)));
        },
        [&](const Squares&) {
            for (std::size_t i = 0; i < n; ++i) {
                Integer v = static_cast<unsigned long>(i);
                out.push_back(v * v);
            }
        },
        [&](const auto& list) {
            if (n > list.elements.size())
                throw Error("set exhausted: requested " + std::to_string(n) + " elements of a set of size " +
                            std::to_string(list.elements.size()));
            out.assign(list.elements.begin(), list.elements.begin() + static_cast<std::ptrdiff_t>(n));
        },
    }, spec.variant());
    return out;
}

std::optional<std::vector<Integer>> canonical_sequence(const SubsetSpec& spec, std::size_t k) {
    std::vector<Integer> out;
    for (std::size_t i = 0; i <= k; ++i) {
        Integer n = static_cast<unsigned long>(i);
        if (std::holds_alternative<Integers>(spec.variant())) {
            out.push_back(n);
        } else if (auto* ap = std::get_if<ArithmeticProgression>(&spec.variant())) {
            out.push_back(ap->offset + ap->step * n);
        } else if (std::holds_alternative<Squares>(spec.variant())) {
            out.push_back(n * n);
        } else {
            return std::nullopt;
        }
    }
    return out;
}

SubsetSpec parse_subset(std::string_view text) {
    std::string_view s = trim(text);
    const std::size_t lead = static_cast<std::size_t>(s.data() - text.data());
    if (s.empty()) throw ParseError("empty set specification", 0);
    if (s == "Z") return SubsetSpec::integers();
    if (s == "squares") return SubsetSpec::squares();

    if (s.starts_with("file:")) {
        std::string path(trim(s.substr(5)));
        if (path.empty()) throw ParseError("missing file path", lead + 5);
        return SubsetSpec::from_file(path);
    }

    if (s.front() == '{') {
        if (s.back() != '}') throw ParseError("expected '}'", lead + s.size());
        std::vector<Integer> elements;
        std::size_t pos = 1;
        std::string_view body = s.substr(1, s.size() - 2);
        if (trim(body).empty()) throw ParseError("subset must be nonempty", lead + 1);
        while (true) {
            std::size_t comma = body.find(',');
            std::string_view item = trim(body.substr(0, comma));
            auto value = parse_integer(item);
            if (!value) throw ParseError("expected an integer", lead + pos);
            elements.push_back(*value);
            if (comma == std::string_view::npos) break;
            pos += comma + 1;
            body.remove_prefix(comma + 1);
        }
        std::vector<Integer> sorted = elements;
        std::sort(sorted.begin(), sorted.end());
        if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
            throw ParseError("duplicate element " + dup->get_str(), lead);
        return SubsetSpec::finite(std::move(elements));
    }

    // <a>Z[(+|-)<b>]
    std::size_t z = s.find('Z');
    if (z == std::string_view::npos) throw ParseError("unrecognized set specification", lead);
    std::string_view a_text = trim(s.substr(0, z));
    Integer a = 1;
    if (!a_text.empty()) {
        if (a_text == "-") a = -1;
        else if (auto v = parse_integer(a_text)) a = *v;
        else throw ParseError("expected an integer step before 'Z'", lead);
    }
    if (a == 0) throw ParseError("progression step must be nonzero", lead);
    std::string_view rest = trim(s.substr(z + 1));
    Integer b = 0;
    if (!rest.empty()) {
        const std::size_t rest_pos = lead + static_cast<std::size_t>(rest.data() - s.data());
        if (rest.front() != '+' && rest.front() != '-') throw ParseError("expected '+' or '-' after 'Z'", rest_pos);
        bool negative = rest.front() == '-';
        auto v = parse_integer(trim(rest.substr(1)));
        if (!v || trim(rest.substr(1)).front() == '-' || trim(rest.substr(1)).front() == '+')
            throw ParseError("expected an integer offset", rest_pos + 1);
        b = negative ? Integer(-*v) : *v;
    }
    return SubsetSpec::progression(a, b);
}

} // namespace ivp
