#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellres {

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multidegree in N^n. Entries are kept nonnegative except in intermediate
// differences, which callers must check with is_nonnegative().
using Exponent = std::vector<int64_t>;

// A fixed set of named variables. All complexes, modules and polynomials in
// one computation share a ring; mixing rings raises DimensionError.
class Ring {
public:
    Ring() = default;
    explicit Ring(std::vector<std::string> variables);
    // k[x1,...,xn] with generated names.
    static Ring with_variables(std::size_t n);

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    int index_of(const std::string& name) const;  // -1 if absent

    bool operator==(const Ring& o) const { return names_ == o.names_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    Exponent zero() const { return Exponent(nvars(), 0); }
    Exponent variable(std::size_t i) const;

    // "a*b^2"; the zero exponent renders as "1".
    std::string monomial_string(const Exponent& e) const;
    // Inverse of monomial_string; accepts "1", "a", "a*b^2", "b^2*a".
    Exponent parse_monomial(const std::string& s) const;

private:
    std::vector<std::string> names_;
};

void check_same_length(const Exponent& a, const Exponent& b);

// Componentwise maximum; the lcm of the two monomials.
Exponent lcm_exp(const Exponent& a, const Exponent& b);
// Componentwise minimum; the gcd of the two monomials.
Exponent gcd_exp(const Exponent& a, const Exponent& b);
Exponent add_exp(const Exponent& a, const Exponent& b);
// a - b without a divisibility check; entries may go negative.
Exponent sub_exp(const Exponent& a, const Exponent& b);
bool is_nonnegative(const Exponent& a);
// b | a, i.e. x^b divides x^a.
bool divides(const Exponent& b, const Exponent& a);
bool is_zero_exp(const Exponent& a);
int64_t total_degree(const Exponent& a);

}  // namespace cellres
