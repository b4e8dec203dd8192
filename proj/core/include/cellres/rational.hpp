#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cellres {

// Exact rational scalar. All coefficient arithmetic in the library goes
// through this type; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational rational_of(int64_t num, int64_t den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

std::string rational_string(const Rational& r);
Rational parse_rational(const std::string& s);

// Coefficient field for homology and solving: Q or Z/p.
struct FieldSpec {
    enum class Kind { Q, Fp };
    Kind kind = Kind::Q;
    int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Q, 0}; }
    static FieldSpec prime(int64_t p);
    bool is_rationals() const { return kind == Kind::Q; }
    std::string describe() const;
};

// Image of an exact rational in Z/p. Throws when the denominator vanishes
// mod p (the rational has no reduction).
int64_t reduce_mod_p(const Rational& r, int64_t p);

}  // namespace cellres
