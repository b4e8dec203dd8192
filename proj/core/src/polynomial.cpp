#include "cellres/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cellres {

std::string rational_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

FieldSpec FieldSpec::prime(int64_t p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be >= 2");
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
    return FieldSpec{Kind::Fp, p};
}

std::string FieldSpec::describe() const {
    return is_rationals() ? "Q" : ("F" + std::to_string(p));
}

namespace {
int64_t mod_pow(int64_t base, int64_t exp, int64_t p) {
    int64_t r = 1;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = (__int128)r * base % p;
        base = (__int128)base * base % p;
        exp >>= 1;
    }
    return r;
}
}  // namespace

int64_t reduce_mod_p(const Rational& r, int64_t p) {
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class pz(static_cast<long>(p));
    mpz_class n = num % pz, d = den % pz;
    int64_t ni = n.get_si() % p, di = d.get_si() % p;
    if (ni < 0) ni += p;
    if (di < 0) di += p;
    if (di == 0) throw std::domain_error("rational has no reduction mod " + std::to_string(p));
    return (__int128)ni * mod_pow(di, p - 2, p) % p;
}

Polynomial Polynomial::constant(const Rational& c, std::size_t nvars) {
    return term(c, Exponent(nvars, 0));
}

Polynomial Polynomial::term(const Rational& c, Exponent e) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

const Exponent& Polynomial::sole_exponent() const {
    if (!is_single_term()) throw std::logic_error("polynomial is not a single term");
    return terms_.begin()->first;
}

const Rational& Polynomial::sole_coefficient() const {
    if (!is_single_term()) throw std::logic_error("polynomial is not a single term");
    return terms_.begin()->second;
}

bool Polynomial::has_unit_term() const {
    for (const auto& [e, c] : terms_)
        if (is_zero_exp(e)) return c != 0;
    return false;
}

Rational Polynomial::coefficient_of(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(add_exp(e1, e2), c1 * c2);
    return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Exponent& e) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [e1, c1] : terms_) r.terms_.emplace(add_exp(e1, e), c1 * c);
    return r;
}

Polynomial Polynomial::times_scalar(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [e1, c1] : terms_) r.terms_.emplace(e1, c1 * c);
    return r;
}

std::optional<Polynomial> Polynomial::divided_by_monomial(const Exponent& e) const {
    Polynomial r;
    for (const auto& [e1, c1] : terms_) {
        Exponent q = sub_exp(e1, e);
        if (!is_nonnegative(q)) return std::nullopt;
        r.terms_.emplace(std::move(q), c1);
    }
    return r;
}

std::string Polynomial::to_string(const Ring& ring) const {
    if (terms_.empty()) return "0";
    // Render higher-degree terms first.
    std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int64_t da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono = ring.monomial_string(e);
        if (a != 1 || mono == "1") {
            out << rational_string(a);
            if (mono != "1") out << "*";
        }
        if (mono != "1") out << mono;
        first = false;
    }
    return out.str();
}

Polynomial Polynomial::parse(const std::string& text, const Ring& ring) {
    // Grammar: term (('+'|'-') term)*, term: [coef '*'] monomial | coef.
    Polynomial result;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) return result;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    while (true) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
        std::string chunk = text.substr(start, i - start);
        while (!chunk.empty() && std::isspace(static_cast<unsigned char>(chunk.back()))) chunk.pop_back();
        if (chunk.empty()) throw std::invalid_argument("empty term in polynomial '" + text + "'");

        Rational coef(1);
        std::string mono = chunk;
        // Leading numeric factor, optionally followed by '*'.
        std::size_t j = 0;
        if (std::isdigit(static_cast<unsigned char>(chunk[0]))) {
            while (j < chunk.size() && (std::isdigit(static_cast<unsigned char>(chunk[j])) || chunk[j] == '/')) ++j;
            coef = parse_rational(chunk.substr(0, j));
            if (j < chunk.size() && chunk[j] == '*') ++j;
            mono = chunk.substr(j);
        }
        Exponent e = mono.empty() ? ring.zero() : ring.parse_monomial(mono);
        if (negative) coef = -coef;
        result.add_term(e, coef);

        skip_ws();
        if (i == text.size()) break;
        negative = text[i] == '-';
        if (text[i] != '+' && text[i] != '-')
            throw std::invalid_argument("expected '+'/'-' in polynomial '" + text + "'");
        ++i;
    }
    return result;
}

}  // namespace cellres
