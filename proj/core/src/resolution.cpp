#include "cellres/resolution.hpp"

#include <algorithm>
#include <functional>

namespace cellres {

std::vector<std::size_t> CellularFreeComplex::ranks() const {
    std::vector<std::size_t> r;
    r.reserve(modules.size());
    for (const auto& m : modules) r.push_back(m.rank());
    return r;
}

const GradedFreeModule& CellularFreeComplex::module(int i) const {
    if (i < 0 || i > top_degree())
        throw ResolutionError("module index " + std::to_string(i) + " out of range");
    return modules[static_cast<std::size_t>(i)];
}

GradedMatrix CellularFreeComplex::differential(int i) const {
    if (i >= 1 && static_cast<std::size_t>(i) <= differentials.size())
        return differentials[static_cast<std::size_t>(i - 1)];
    GradedFreeModule empty(ring);
    const GradedFreeModule& tgt = (i - 1 >= 0 && i - 1 <= top_degree())
                                      ? modules[static_cast<std::size_t>(i - 1)]
                                      : empty;
    const GradedFreeModule& src =
        (i >= 0 && i <= top_degree()) ? modules[static_cast<std::size_t>(i)] : empty;
    return GradedMatrix(tgt, src);
}

bool CellularFreeComplex::d_squared_is_zero() const {
    for (std::size_t i = 0; i + 1 < differentials.size(); ++i)
        if (!matrix_compose(differentials[i], differentials[i + 1]).is_zero()) return false;
    return true;
}

bool CellularFreeComplex::is_multigraded() const {
    Exponent zero(ring.nvars(), 0);
    for (const auto& d : differentials)
        if (!d.is_homogeneous(zero)) return false;
    return true;
}

void CellularFreeComplex::validate() const {
    if (differentials.size() + 1 != modules.size() && !(modules.size() <= 1 && differentials.empty()))
        throw ResolutionError("differential count does not match module count");
    for (std::size_t i = 0; i < differentials.size(); ++i) {
        if (differentials[i].source() != modules[i + 1] || differentials[i].target() != modules[i])
            throw ResolutionError("differential " + std::to_string(i + 1) + " has wrong modules");
    }
}

CellularFreeComplex cellular_free_complex(const LabeledComplex& x) {
    ValidationReport rep = x.validate_cw();
    if (!rep.cw_ok()) {
        std::string msg = "invalid CW complex";
        for (const auto& m : rep.messages) msg += "; " + m;
        throw ResolutionError(msg);
    }

    CellularFreeComplex f;
    f.ring = x.ring();

    auto comps = x.components();
    std::map<std::string, int> comp_of_cell;
    for (std::size_t k = 0; k < comps.size(); ++k)
        for (const auto& id : comps[k]) comp_of_cell[id] = static_cast<int>(k);

    GradedFreeModule f0(x.ring());
    std::size_t comp_count = x.empty() ? 1 : comps.size();
    std::map<std::string, int> component_of_gen;
    for (std::size_t k = 0; k < comp_count; ++k) {
        std::string id = "comp" + std::to_string(k);
        f0.add_generator(id, x.ring().zero());
        component_of_gen[id] = static_cast<int>(k);
    }
    f.modules.push_back(std::move(f0));

    int top = x.dim();
    for (int d = 0; d <= top; ++d) {
        GradedFreeModule m(x.ring());
        for (const auto& id : x.cells_of_dim(d)) m.add_generator(id, x.label(id));
        f.modules.push_back(std::move(m));
    }

    // d_1: vertex -> its component generator with the vertex label.
    if (top >= 0) {
        GradedMatrix d1(f.modules[0], f.modules[1]);
        for (std::size_t c = 0; c < f.modules[1].rank(); ++c) {
            const auto& gen = f.modules[1].generator(c);
            int comp = comp_of_cell.at(gen.id);
            d1.set_entry(static_cast<std::size_t>(comp), c,
                         Polynomial::monomial(gen.degree));
        }
        f.differentials.push_back(std::move(d1));
    }
    for (int d = 1; d <= top; ++d) {
        const GradedFreeModule& src = f.modules[static_cast<std::size_t>(d + 1)];
        const GradedFreeModule& tgt = f.modules[static_cast<std::size_t>(d)];
        GradedMatrix di(tgt, src);
        for (std::size_t c = 0; c < src.rank(); ++c) {
            const auto& gen = src.generator(c);
            std::map<std::string, int64_t> first;
            for (const auto& [fid, s] : x.cell(gen.id).boundary) first[fid] += s;
            for (const auto& [fid, s] : first) {
                if (s == 0) continue;
                int r = tgt.index_of(fid);
                Exponent diff = sub_exp(gen.degree, tgt.degree(static_cast<std::size_t>(r)));
                if (!is_nonnegative(diff))
                    throw ResolutionError("face label does not divide coface label at " + gen.id);
                di.add_to_entry(static_cast<std::size_t>(r), c,
                                Polynomial::term(rational_of(s), diff));
            }
        }
        f.differentials.push_back(std::move(di));
    }

    if (!f.d_squared_is_zero()) throw ResolutionError("cellular differential does not square to zero");
    f.link = CellLink{x, std::move(component_of_gen), true};
    return f;
}

CellularFreeComplex taylor_complex(const Ring& ring, const std::vector<Exponent>& generators) {
    return cellular_free_complex(simplex_complex(ring, generators));
}

CellularFreeComplex koszul_complex(const Ring& ring) {
    std::vector<Exponent> vars;
    for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(ring.variable(i));
    return taylor_complex(ring, vars);
}

CellularFreeComplex initial_object(const Ring& ring) {
    return cellular_free_complex(LabeledComplex(ring));
}

FieldChainComplex strand(const CellularFreeComplex& f, const Exponent& b, const FieldSpec& field) {
    FieldChainComplex out;
    out.field = field;
    out.min_degree = 0;
    std::vector<std::vector<std::size_t>> basis;  // per degree, generator indices
    for (int i = 0; i <= f.top_degree(); ++i) {
        std::vector<std::size_t> idx;
        const auto& m = f.module(i);
        for (std::size_t g = 0; g < m.rank(); ++g)
            if (divides(m.degree(g), b)) idx.push_back(g);
        basis.push_back(idx);
        out.dims.push_back(idx.size());
    }
    while (!out.dims.empty() && out.dims.back() == 0) {
        out.dims.pop_back();
        basis.pop_back();
    }
    for (std::size_t i = 1; i < out.dims.size(); ++i) {
        QMatrix m(out.dims[i - 1], out.dims[i]);
        GradedMatrix d = f.differential(static_cast<int>(i));
        const auto& tgt = f.module(static_cast<int>(i - 1));
        const auto& src = f.module(static_cast<int>(i));
        for (std::size_t c = 0; c < basis[i].size(); ++c)
            for (std::size_t r = 0; r < basis[i - 1].size(); ++r) {
                const Polynomial& p = d.entry(basis[i - 1][r], basis[i][c]);
                if (p.is_zero()) continue;
                Exponent want = sub_exp(src.degree(basis[i][c]), tgt.degree(basis[i - 1][r]));
                if (!is_nonnegative(want)) continue;
                m.at(r, c) = p.coefficient_of(want);
            }
        out.boundaries.push_back(std::move(m));
    }
    return out;
}

std::set<Exponent> lcm_closure(const std::vector<Exponent>& degrees, std::size_t nvars) {
    std::set<Exponent> closure;
    closure.insert(Exponent(nvars, 0));
    for (const auto& d : degrees) closure.insert(d);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Exponent> snapshot(closure.begin(), closure.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                Exponent join = lcm_exp(snapshot[i], snapshot[j]);
                if (closure.insert(std::move(join)).second) grew = true;
            }
    }
    return closure;
}

AcyclicityReport is_acyclic_complex(const CellularFreeComplex& f, const FieldSpec& field) {
    std::vector<Exponent> degs;
    for (const auto& m : f.modules)
        for (const auto& g : m.generators()) degs.push_back(g.degree);
    AcyclicityReport rep;
    for (const Exponent& b : lcm_closure(degs, f.ring.nvars())) {
        FieldChainComplex s = strand(f, b, field);
        auto ranks = s.homology_ranks();
        for (std::size_t i = 1; i < ranks.size(); ++i) {
            if (ranks[i] != 0) {
                rep.acyclic = false;
                rep.witness_degree = b;
                rep.witness_homological_degree = static_cast<int>(i);
                return rep;
            }
        }
    }
    return rep;
}

AcyclicityReport is_resolution_combinatorial(const LabeledComplex& x, const FieldSpec& field) {
    std::vector<Exponent> labels;
    for (const auto& [id, l] : x.vertex_labels()) labels.push_back(l);
    AcyclicityReport rep;
    auto comps = x.components();
    for (const Exponent& b : lcm_closure(labels, x.ring().nvars())) {
        for (const auto& comp : comps) {
            std::set<std::string> keep;
            for (const auto& id : comp) {
                if (divides(x.label(id), b)) keep.insert(id);
            }
            // Keep only cells whose entire closure qualifies; label
            // monotonicity makes the divisibility filter closed already,
            // but overrides could break that, so re-check.
            std::set<std::string> closed;
            for (const auto& id : keep) {
                auto cl = x.closure(id);
                if (std::all_of(cl.begin(), cl.end(),
                                [&](const std::string& c) { return keep.count(c) > 0; }))
                    closed.insert(id);
            }
            LabeledComplex sub = restrict_to_cells(x, closed);
            if (sub.empty()) continue;
            auto ranks = reduced_homology_ranks(sub, field);
            for (std::size_t i = 1; i < ranks.size(); ++i) {  // degrees 0..dim
                if (ranks[i] != 0) {
                    rep.acyclic = false;
                    rep.witness_degree = b;
                    rep.witness_homological_degree = static_cast<int>(i) - 1;
                    return rep;
                }
            }
        }
    }
    return rep;
}

std::vector<std::vector<Exponent>> resolved_module(const CellularFreeComplex& f,
                                                   const FieldSpec& field) {
    if (!f.link) throw ResolutionError("resolved_module needs a linked complex");
    AcyclicityReport rep = is_acyclic_complex(f, field);
    if (!rep.acyclic) throw ResolutionError("complex is not a resolution");
    const LabeledComplex& x = f.link->complex;
    if (x.empty()) return {{x.ring().zero()}};  // the unit ideal
    std::vector<std::vector<Exponent>> out;
    for (const auto& comp : x.components()) {
        std::vector<Exponent> gens;
        for (const auto& id : comp)
            if (x.cell(id).dim == 0) gens.push_back(x.vertex_labels().at(id));
        out.push_back(std::move(gens));
    }
    return out;
}

BettiTable betti(const CellularFreeComplex& f) {
    BettiTable table;
    for (int i = 0; i <= f.top_degree(); ++i)
        for (const auto& g : f.module(i).generators()) ++table[{i, g.degree}];
    return table;
}

bool is_minimal(const CellularFreeComplex& f) {
    for (const auto& d : f.differentials)
        if (d.has_unit_entry()) return false;
    return true;
}

BettiTable minimal_betti(const CellularFreeComplex& f, const FieldSpec& field) {
    // Tensor with the residue field: keep only constant entries, then count
    // strand homology in each generator multidegree.
    CellularFreeComplex reduced = f;
    reduced.link.reset();
    for (auto& d : reduced.differentials) {
        GradedMatrix killed(d.target(), d.source());
        for (const auto& [pos, p] : d.entries()) {
            Rational c = p.coefficient_of(Exponent(f.ring.nvars(), 0));
            if (c != 0) killed.set_entry(pos.first, pos.second,
                                         Polynomial::constant(c, f.ring.nvars()));
        }
        d = std::move(killed);
    }
    BettiTable table;
    std::set<Exponent> degrees;
    for (const auto& m : f.modules)
        for (const auto& g : m.generators()) degrees.insert(g.degree);
    for (const Exponent& b : degrees) {
        // The degree-b part of F (x) k: generators of degree exactly b.
        std::vector<std::vector<std::size_t>> basis;
        std::vector<std::size_t> dims;
        for (int i = 0; i <= reduced.top_degree(); ++i) {
            std::vector<std::size_t> idx;
            const auto& m = reduced.module(i);
            for (std::size_t g = 0; g < m.rank(); ++g)
                if (m.degree(g) == b) idx.push_back(g);
            basis.push_back(idx);
            dims.push_back(idx.size());
        }
        FieldChainComplex part;
        part.field = field;
        part.min_degree = 0;
        part.dims = dims;
        for (std::size_t i = 1; i < dims.size(); ++i) {
            QMatrix m(dims[i - 1], dims[i]);
            GradedMatrix d = reduced.differential(static_cast<int>(i));
            for (std::size_t c = 0; c < basis[i].size(); ++c)
                for (std::size_t r = 0; r < basis[i - 1].size(); ++r) {
                    const Polynomial& p = d.entry(basis[i - 1][r], basis[i][c]);
                    if (!p.is_zero())
                        m.at(r, c) = p.coefficient_of(Exponent(f.ring.nvars(), 0));
                }
            part.boundaries.push_back(std::move(m));
        }
        auto ranks = part.homology_ranks();
        for (std::size_t i = 0; i < ranks.size(); ++i)
            if (ranks[i] != 0) table[{static_cast<int>(i), b}] = ranks[i];
    }
    return table;
}

namespace {

// Backtracking search for a degree-preserving signed generator matching
// that intertwines all differentials. Complexes here are tiny, so the
// search space stays far below the documented candidate bound.
struct IsoSearch {
    const CellularFreeComplex& f;
    const CellularFreeComplex& g;
    std::vector<SignedPermutation> assignment;

    bool column_compatible(int degree, std::size_t fc, std::size_t gc) {
        // With all lower degrees assigned, compare column fc of f's d_degree
        // against column gc of g's (degree >= 1).
        if (degree == 0) return true;
        GradedMatrix df = f.differential(degree);
        GradedMatrix dg = g.differential(degree);
        const auto& low = assignment[static_cast<std::size_t>(degree - 1)];
        int fsign = assignment[static_cast<std::size_t>(degree)].sign[fc];
        for (std::size_t r = 0; r < df.rows(); ++r) {
            Polynomial want =
                dg.entry(low.perm[r], gc).times_scalar(rational_of(low.sign[r] * fsign));
            if (df.entry(r, fc) != want) return false;
        }
        return true;
    }

    bool extend(int degree, std::size_t fc, std::vector<bool>& used) {
        const auto& fm = f.module(degree);
        const auto& gm = g.module(degree);
        if (fc == fm.rank()) {
            if (degree == f.top_degree()) return true;
            std::vector<bool> next_used(g.module(degree + 1).rank(), false);
            return extend(degree + 1, 0, next_used);
        }
        for (std::size_t gc = 0; gc < gm.rank(); ++gc) {
            if (used[gc] || gm.degree(gc) != fm.degree(fc)) continue;
            for (int s : {1, -1}) {
                assignment[static_cast<std::size_t>(degree)].perm[fc] = gc;
                assignment[static_cast<std::size_t>(degree)].sign[fc] = s;
                if (!column_compatible(degree, fc, gc)) continue;
                used[gc] = true;
                if (extend(degree, fc + 1, used)) return true;
                used[gc] = false;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<SignedPermutation>> iso_up_to_signed_permutation(
    const CellularFreeComplex& f, const CellularFreeComplex& g) {
    if (f.top_degree() != g.top_degree()) return std::nullopt;
    for (int i = 0; i <= f.top_degree(); ++i)
        if (f.rank(i) != g.rank(i)) return std::nullopt;
    IsoSearch search{f, g, {}};
    search.assignment.resize(static_cast<std::size_t>(f.top_degree()) + 1);
    for (int i = 0; i <= f.top_degree(); ++i) {
        search.assignment[static_cast<std::size_t>(i)].perm.assign(f.rank(i), 0);
        search.assignment[static_cast<std::size_t>(i)].sign.assign(f.rank(i), 1);
    }
    std::vector<bool> used(g.rank(0), false);
    if (search.extend(0, 0, used)) return search.assignment;
    return std::nullopt;
}

CellLink complex_from_free_complex(const CellularFreeComplex& f) {
    CellLink link;
    link.regular = true;
    LabeledComplex x(f.ring);
    // Degree-1 generators are the vertices.
    for (int i = 1; i <= f.top_degree(); ++i) {
        GradedMatrix d = f.differential(i);
        for (std::size_t c = 0; c < f.module(i).rank(); ++c) {
            const auto& gen = f.module(i).generator(c);
            Cell cellData;
            cellData.id = gen.id;
            cellData.dim = i - 1;
            if (i >= 2) {
                for (std::size_t r = 0; r < d.rows(); ++r) {
                    const Polynomial& p = d.entry(r, c);
                    if (p.is_zero()) continue;
                    if (!p.is_single_term()) {
                        link.regular = false;
                        continue;
                    }
                    Rational coeff = p.sole_coefficient();
                    int s;
                    if (coeff == 1)
                        s = 1;
                    else if (coeff == -1)
                        s = -1;
                    else {
                        link.regular = false;
                        s = coeff > 0 ? 1 : -1;
                    }
                    cellData.boundary.emplace_back(f.module(i - 1).generator(r).id, s);
                }
            }
            x.add_cell(std::move(cellData));
            if (i == 1) x.set_vertex_label(gen.id, gen.degree);
        }
    }
    // Face labels that disagree with the closure lcm become overrides.
    for (int i = 2; i <= f.top_degree(); ++i)
        for (const auto& gen : f.module(i).generators())
            if (x.label(gen.id) != gen.degree) x.set_label_override(gen.id, gen.degree);

    // Component map for the degree-0 generators, read from d_1.
    auto comps = x.components();
    std::map<std::string, int> comp_of_cell;
    for (std::size_t k = 0; k < comps.size(); ++k)
        for (const auto& id : comps[k]) comp_of_cell[id] = static_cast<int>(k);
    GradedMatrix d1 = f.differential(1);
    for (std::size_t r = 0; r < f.module(0).rank(); ++r) {
        int comp = -1;
        for (std::size_t c = 0; c < d1.cols(); ++c) {
            if (d1.entry(r, c).is_zero()) continue;
            int vc = comp_of_cell.at(f.module(1).generator(c).id);
            if (comp == -1)
                comp = vc;
            else if (comp != vc)
                link.regular = false;  // d_1 rows should split by component
        }
        link.component_of_gen[f.module(0).generator(r).id] = comp;
    }
    link.complex = std::move(x);
    return link;
}

}  // namespace cellres
