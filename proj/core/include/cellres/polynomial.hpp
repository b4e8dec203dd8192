#pragma once

#include <map>
#include <optional>
#include <string>

#include "cellres/rational.hpp"
#include "cellres/ring.hpp"

namespace cellres {

// Sparse polynomial with exact rational coefficients. Terms are kept in a
// sorted map with no zero coefficients, so equal polynomials compare equal
// structurally and iteration order is deterministic.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    Polynomial() = default;
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c, std::size_t nvars);
    static Polynomial term(const Rational& c, Exponent e);
    static Polynomial monomial(Exponent e) { return term(Rational(1), std::move(e)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Single-term queries used by the homogeneity checks.
    bool is_single_term() const { return terms_.size() == 1; }
    const Exponent& sole_exponent() const;
    const Rational& sole_coefficient() const;
    // Nonzero constant (exponent zero appears among terms).
    bool has_unit_term() const;

    Rational coefficient_of(const Exponent& e) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial times_term(const Rational& c, const Exponent& e) const;
    Polynomial times_scalar(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Exact division by a monomial; nullopt when some term is not divisible.
    std::optional<Polynomial> divided_by_monomial(const Exponent& e) const;

    std::string to_string(const Ring& ring) const;
    static Polynomial parse(const std::string& text, const Ring& ring);

private:
    void add_term(const Exponent& e, const Rational& c);
    TermMap terms_;
};

}  // namespace cellres
