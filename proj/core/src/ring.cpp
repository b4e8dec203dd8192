#include "cellres/ring.hpp"

#include <algorithm>
#include <sstream>

namespace cellres {

Ring::Ring(std::vector<std::string> variables) : names_(std::move(variables)) {
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
    }
}

Ring Ring::with_variables(std::size_t n) {
    static const char* defaults[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < 8)
            names.emplace_back(defaults[i]);
        else
            names.emplace_back("x" + std::to_string(i + 1));
    }
    return Ring(std::move(names));
}

int Ring::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Exponent Ring::variable(std::size_t i) const {
    Exponent e = zero();
    e.at(i) = 1;
    return e;
}

std::string Ring::monomial_string(const Exponent& e) const {
    if (e.size() != nvars()) throw DimensionError("exponent length does not match ring");
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "*";
        out << names_[i];
        if (e[i] != 1) out << "^" << e[i];
        first = false;
    }
    if (first) return "1";
    return out.str();
}

Exponent Ring::parse_monomial(const std::string& s) const {
    Exponent e = zero();
    if (s == "1" || s.empty()) return e;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t star = s.find('*', pos);
        std::string factor = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        std::size_t caret = factor.find('^');
        std::string var = factor.substr(0, caret);
        int64_t exp = 1;
        if (caret != std::string::npos) exp = std::stoll(factor.substr(caret + 1));
        int idx = index_of(var);
        if (idx < 0) throw std::invalid_argument("unknown variable '" + var + "'");
        if (exp < 0) throw std::invalid_argument("negative exponent in monomial");
        e[static_cast<std::size_t>(idx)] += exp;
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return e;
}

void check_same_length(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        throw DimensionError("exponent vectors have different lengths");
}

Exponent lcm_exp(const Exponent& a, const Exponent& b) {
    check_same_length(a, b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponent gcd_exp(const Exponent& a, const Exponent& b) {
    check_same_length(a, b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
    check_same_length(a, b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponent sub_exp(const Exponent& a, const Exponent& b) {
    check_same_length(a, b);
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool is_nonnegative(const Exponent& a) {
    return std::all_of(a.begin(), a.end(), [](int64_t v) { return v >= 0; });
}

bool divides(const Exponent& b, const Exponent& a) {
    check_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

bool is_zero_exp(const Exponent& a) {
    return std::all_of(a.begin(), a.end(), [](int64_t v) { return v == 0; });
}

int64_t total_degree(const Exponent& a) {
    int64_t t = 0;
    for (int64_t v : a) t += v;
    return t;
}

}  // namespace cellres
