#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cellres/module.hpp"
#include "cellres/qlinalg.hpp"

namespace cellres {

// One unknown matrix H: source -> target inside a linear problem. Each
// admissible entry is an S-linear combination of candidate monomials with
// unknown field coefficients; inadmissible positions are forced to zero.
struct MatrixUnknown {
    enum class Mode {
        // Entry (r,c) is a scalar times x^(deg(source_c)+shift-deg(target_r)),
        // zero when that exponent has a negative component.
        HomogeneousShift,
        // Candidate monomials are derived from the right-hand sides: an
        // entry monomial is admissible if it can contribute to some
        // right-hand-side monomial through the framing matrices.
        FromRhs,
    };

    GradedFreeModule target, source;
    Mode mode = Mode::HomogeneousShift;
    Exponent shift;  // used by HomogeneousShift
    // Allowed (row, col) positions; nullopt means all positions.
    std::optional<std::set<std::pair<std::size_t, std::size_t>>> support;
};

// One summand  scale * L * H_j * R  of an equation's left side. Absent L or
// R is the identity.
struct LinearTerm {
    std::optional<GradedMatrix> left;
    std::size_t unknown = 0;
    std::optional<GradedMatrix> right;
    Rational scale = Rational(1);
};

struct MatrixEquation {
    std::vector<LinearTerm> terms;
    GradedMatrix rhs;
};

// Exact linear problem in several unknown matrices. Matching monomial
// coefficients entrywise turns it into a finite system over the coefficient
// field; the solution returned is the one with free variables zero under
// left-to-right column, top-to-bottom row pivoting.
class MatrixProblem {
public:
    std::size_t add_unknown(MatrixUnknown u);
    void add_equation(MatrixEquation eq);

    std::optional<std::vector<GradedMatrix>> solve(
        const FieldSpec& field = FieldSpec::rationals()) const;

private:
    std::vector<MatrixUnknown> unknowns_;
    std::vector<MatrixEquation> equations_;
};

// Solve D*H = RHS for H: RHS.source -> D.source.
std::optional<GradedMatrix> graded_solve_left(
    const GradedMatrix& d, const GradedMatrix& rhs, const Exponent& shift,
    const FieldSpec& field = FieldSpec::rationals());

// Solve H*D = RHS for H: D.target -> RHS.target.
std::optional<GradedMatrix> graded_solve_right(
    const GradedMatrix& d, const GradedMatrix& rhs, const Exponent& shift,
    const FieldSpec& field = FieldSpec::rationals());

}  // namespace cellres
