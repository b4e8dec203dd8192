#include "cellres/solve.hpp"

#include <map>

namespace cellres {

namespace {

// Flattened scalar variable: (unknown, row, col, candidate exponent).
struct Var {
    std::size_t unknown, row, col;
    Exponent exp;
};

using CandidateMap = std::map<std::pair<std::size_t, std::size_t>, std::set<Exponent>>;

bool position_allowed(const MatrixUnknown& u, std::size_t r, std::size_t c) {
    return !u.support || u.support->count({r, c}) > 0;
}

}  // namespace

std::size_t MatrixProblem::add_unknown(MatrixUnknown u) {
    unknowns_.push_back(std::move(u));
    return unknowns_.size() - 1;
}

void MatrixProblem::add_equation(MatrixEquation eq) {
    for (const auto& t : eq.terms) {
        if (t.unknown >= unknowns_.size())
            throw std::invalid_argument("equation references undefined unknown");
        const MatrixUnknown& u = unknowns_[t.unknown];
        const GradedFreeModule& out = t.left ? t.left->target() : u.target;
        const GradedFreeModule& in = t.right ? t.right->source() : u.source;
        if (t.left && t.left->source() != u.target)
            throw DimensionError("left factor does not compose with unknown");
        if (t.right && t.right->target() != u.source)
            throw DimensionError("right factor does not compose with unknown");
        if (out != eq.rhs.target() || in != eq.rhs.source())
            throw DimensionError("equation term shape does not match rhs");
    }
    equations_.push_back(std::move(eq));
}

std::optional<std::vector<GradedMatrix>> MatrixProblem::solve(const FieldSpec& field) const {
    // 1. Candidate exponents per unknown position.
    std::vector<CandidateMap> candidates(unknowns_.size());
    for (std::size_t j = 0; j < unknowns_.size(); ++j) {
        const MatrixUnknown& u = unknowns_[j];
        if (u.mode == MatrixUnknown::Mode::HomogeneousShift) {
            Exponent shift = u.shift.empty() ? u.target.ring().zero() : u.shift;
            for (std::size_t r = 0; r < u.target.rank(); ++r)
                for (std::size_t c = 0; c < u.source.rank(); ++c) {
                    if (!position_allowed(u, r, c)) continue;
                    Exponent e = sub_exp(add_exp(u.source.degree(c), shift), u.target.degree(r));
                    if (is_nonnegative(e)) candidates[j][{r, c}].insert(std::move(e));
                }
        }
    }
    for (const auto& eq : equations_) {
        for (const auto& t : eq.terms) {
            const MatrixUnknown& u = unknowns_[t.unknown];
            if (u.mode != MatrixUnknown::Mode::FromRhs) continue;
            // H(a,b) reaches rhs position (R,C) through L(R,a) and Rm(b,C);
            // a monomial e is useful when e + l + r hits an rhs monomial m.
            for (const auto& [rpos, rp] : eq.rhs.entries()) {
                auto [R, C] = rpos;
                for (std::size_t a = 0; a < u.target.rank(); ++a) {
                    std::vector<Exponent> lefts;
                    if (t.left) {
                        const Polynomial& lp = t.left->entry(R, a);
                        for (const auto& [le, lc] : lp.terms()) lefts.push_back(le);
                    } else if (R == a) {
                        lefts.push_back(u.target.ring().zero());
                    }
                    if (lefts.empty()) continue;
                    for (std::size_t b = 0; b < u.source.rank(); ++b) {
                        if (!position_allowed(u, a, b)) continue;
                        std::vector<Exponent> rights;
                        if (t.right) {
                            const Polynomial& rpoly = t.right->entry(b, C);
                            for (const auto& [re, rc] : rpoly.terms()) rights.push_back(re);
                        } else if (b == C) {
                            rights.push_back(u.source.ring().zero());
                        }
                        for (const auto& [m, mc] : rp.terms())
                            for (const auto& le : lefts)
                                for (const auto& re : rights) {
                                    Exponent e = sub_exp(sub_exp(m, le), re);
                                    if (is_nonnegative(e))
                                        candidates[t.unknown][{a, b}].insert(std::move(e));
                                }
                    }
                }
            }
        }
    }

    // 2. Flatten variables; pivot order is columns left-to-right then rows.
    std::vector<Var> vars;
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::map<Exponent, std::size_t>>>
        var_index(unknowns_.size());
    for (std::size_t j = 0; j < unknowns_.size(); ++j) {
        const MatrixUnknown& u = unknowns_[j];
        for (std::size_t c = 0; c < u.source.rank(); ++c)
            for (std::size_t r = 0; r < u.target.rank(); ++r) {
                auto it = candidates[j].find({r, c});
                if (it == candidates[j].end()) continue;
                for (const Exponent& e : it->second) {
                    var_index[j][{r, c}][e] = vars.size();
                    vars.push_back({j, r, c, e});
                }
            }
    }

    // 3. Constraint rows: one per (equation, position, monomial).
    std::vector<std::map<std::size_t, Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& eq : equations_) {
        std::map<std::pair<std::size_t, std::size_t>, std::map<Exponent, std::map<std::size_t, Rational>>>
            lhs;
        for (const auto& t : eq.terms) {
            const MatrixUnknown& u = unknowns_[t.unknown];
            for (const auto& [pos, exps] : var_index[t.unknown]) {
                auto [a, b] = pos;
                // Left factor column a, right factor row b.
                for (std::size_t R = 0; R < eq.rhs.target().rank(); ++R) {
                    Polynomial lp = t.left ? t.left->entry(R, a)
                                           : (R == a ? Polynomial::constant(Rational(1),
                                                                            u.target.ring().nvars())
                                                     : Polynomial());
                    if (lp.is_zero()) continue;
                    for (std::size_t C = 0; C < eq.rhs.source().rank(); ++C) {
                        Polynomial rpoly = t.right
                                               ? t.right->entry(b, C)
                                               : (b == C ? Polynomial::constant(
                                                               Rational(1), u.source.ring().nvars())
                                                         : Polynomial());
                        if (rpoly.is_zero()) continue;
                        Polynomial frame = (lp * rpoly).times_scalar(t.scale);
                        for (const auto& [e, vi] : exps)
                            for (const auto& [fe, fc] : frame.terms())
                                lhs[{R, C}][add_exp(fe, e)][vi] += fc;
                    }
                }
            }
        }
        // Positions/monomials present on either side contribute a row.
        std::map<std::pair<std::size_t, std::size_t>, std::set<Exponent>> monos;
        for (const auto& [pos, by_mono] : lhs)
            for (const auto& [m, coeffs] : by_mono) monos[pos].insert(m);
        for (const auto& [pos, p] : eq.rhs.entries())
            for (const auto& [m, c] : p.terms()) monos[pos].insert(m);
        for (const auto& [pos, mset] : monos)
            for (const Exponent& m : mset) {
                std::map<std::size_t, Rational> row;
                auto it = lhs.find(pos);
                if (it != lhs.end()) {
                    auto mit = it->second.find(m);
                    if (mit != it->second.end())
                        for (const auto& [vi, c] : mit->second)
                            if (c != 0) row[vi] = c;
                }
                rows.push_back(std::move(row));
                rhs.push_back(eq.rhs.entry(pos.first, pos.second).coefficient_of(m));
            }
    }

    auto sol = solve_min_support(rows, rhs, vars.size(), field);
    if (!sol) return std::nullopt;

    std::vector<GradedMatrix> result;
    result.reserve(unknowns_.size());
    for (std::size_t j = 0; j < unknowns_.size(); ++j)
        result.emplace_back(unknowns_[j].target, unknowns_[j].source);
    for (std::size_t v = 0; v < vars.size(); ++v) {
        if ((*sol)[v] == 0) continue;
        const Var& var = vars[v];
        result[var.unknown].add_to_entry(var.row, var.col,
                                         Polynomial::term((*sol)[v], var.exp));
    }

    // Exact substitution check; elimination over the right field makes this
    // a no-op, but it guards the Fp lift.
    for (const auto& eq : equations_) {
        GradedMatrix acc(eq.rhs.target(), eq.rhs.source());
        for (const auto& t : eq.terms) {
            GradedMatrix v = result[t.unknown];
            if (t.left) v = matrix_compose(*t.left, v);
            if (t.right) v = matrix_compose(v, *t.right);
            acc = acc + v.times_scalar(t.scale);
        }
        if (field.is_rationals()) {
            if (acc != eq.rhs) return std::nullopt;
        } else {
            GradedMatrix diff = acc - eq.rhs;
            for (const auto& [pos, p] : diff.entries())
                for (const auto& [e, c] : p.terms())
                    if (reduce_mod_p(c, field.p) != 0) return std::nullopt;
        }
    }
    return result;
}

std::optional<GradedMatrix> graded_solve_left(const GradedMatrix& d, const GradedMatrix& rhs,
                                              const Exponent& shift, const FieldSpec& field) {
    MatrixProblem prob;
    MatrixUnknown u;
    u.target = d.source();
    u.source = rhs.source();
    u.mode = MatrixUnknown::Mode::HomogeneousShift;
    u.shift = shift;
    std::size_t j = prob.add_unknown(std::move(u));
    prob.add_equation({{LinearTerm{d, j, std::nullopt, Rational(1)}}, rhs});
    auto sol = prob.solve(field);
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

std::optional<GradedMatrix> graded_solve_right(const GradedMatrix& d, const GradedMatrix& rhs,
                                               const Exponent& shift, const FieldSpec& field) {
    MatrixProblem prob;
    MatrixUnknown u;
    u.target = rhs.target();
    u.source = d.target();
    u.mode = MatrixUnknown::Mode::HomogeneousShift;
    u.shift = shift;
    std::size_t j = prob.add_unknown(std::move(u));
    prob.add_equation({{LinearTerm{std::nullopt, j, d, Rational(1)}}, rhs});
    auto sol = prob.solve(field);
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

}  // namespace cellres
