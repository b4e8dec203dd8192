#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellres/polynomial.hpp"
#include "cellres/ring.hpp"

namespace cellres {

// Free S-module with named generators in fixed multidegrees.
class GradedFreeModule {
public:
    struct Generator {
        std::string id;
        Exponent degree;
        bool operator==(const Generator& o) const { return id == o.id && degree == o.degree; }
    };

    GradedFreeModule() = default;
    explicit GradedFreeModule(Ring ring) : ring_(std::move(ring)) {}
    GradedFreeModule(Ring ring, std::vector<Generator> gens);

    const Ring& ring() const { return ring_; }
    std::size_t rank() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(std::size_t i) const { return gens_.at(i); }
    const Exponent& degree(std::size_t i) const { return gens_.at(i).degree; }
    int index_of(const std::string& id) const;  // -1 if absent
    void add_generator(std::string id, Exponent degree);

    bool operator==(const GradedFreeModule& o) const {
        return ring_ == o.ring_ && gens_ == o.gens_;
    }
    bool operator!=(const GradedFreeModule& o) const { return !(*this == o); }

private:
    Ring ring_;
    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
};

// Matrix of a map source -> target with polynomial entries, stored sparsely
// keyed by (row, col) = (target generator, source generator). Row-major
// iteration order makes every rendering and product deterministic.
class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(GradedFreeModule target, GradedFreeModule source);
    static GradedMatrix identity(const GradedFreeModule& m);
    static GradedMatrix zero(const GradedFreeModule& target, const GradedFreeModule& source) {
        return GradedMatrix(target, source);
    }

    const GradedFreeModule& source() const { return source_; }
    const GradedFreeModule& target() const { return target_; }
    std::size_t rows() const { return target_.rank(); }
    std::size_t cols() const { return source_.rank(); }

    const Polynomial& entry(std::size_t r, std::size_t c) const;
    void set_entry(std::size_t r, std::size_t c, Polynomial p);
    void add_to_entry(std::size_t r, std::size_t c, const Polynomial& p);
    const std::map<std::pair<std::size_t, std::size_t>, Polynomial>& entries() const {
        return entries_;
    }

    bool is_zero() const { return entries_.empty(); }
    bool operator==(const GradedMatrix& o) const;
    bool operator!=(const GradedMatrix& o) const { return !(*this == o); }

    GradedMatrix operator+(const GradedMatrix& o) const;
    GradedMatrix operator-(const GradedMatrix& o) const;
    GradedMatrix operator-() const;
    GradedMatrix times_scalar(const Rational& c) const;

    // Multigraded homogeneity: every entry is a single term of exponent
    // deg(source_c) + shift - deg(target_r). Complexes built from labeled
    // cell data satisfy this with shift 0. Returns the first offending
    // position when the check fails.
    std::optional<std::pair<std::size_t, std::size_t>> homogeneity_failure(
        const Exponent& shift) const;
    bool is_homogeneous(const Exponent& shift) const {
        return !homogeneity_failure(shift).has_value();
    }
    // No entry with a nonzero constant term (minimality test for differentials).
    bool has_unit_entry() const;

    std::string to_string() const;

private:
    GradedFreeModule target_, source_;
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> entries_;
};

// Exact product A*B for composable maps (A.source == B.target as modules).
GradedMatrix matrix_compose(const GradedMatrix& a, const GradedMatrix& b);

// Restriction of a matrix to generator subsets, reindexed against the given
// submodules; positions outside the subsets must be zero unless `project`.
GradedMatrix submatrix(const GradedMatrix& m, const std::vector<std::size_t>& row_idx,
                       const std::vector<std::size_t>& col_idx,
                       const GradedFreeModule& target, const GradedFreeModule& source);

}  // namespace cellres
