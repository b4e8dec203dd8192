#include "cellres/morphism.hpp"

#include <algorithm>

namespace cellres {

const std::set<std::string>& CellularMap::carrier_of(const std::string& id) const {
    static const std::set<std::string> kEmpty;
    auto it = carrier.find(id);
    return it == carrier.end() ? kEmpty : it->second;
}

CellularMap CellularMap::identity_on(const LabeledComplex& x) {
    CellularMap g;
    for (const auto& [id, c] : x.cells()) g.carrier[id] = {id};
    return g;
}

CellularMapReport validate_cellular(const CellularMap& g, const LabeledComplex& x,
                                    const LabeledComplex& y) {
    CellularMapReport rep;
    auto fail = [&rep](std::string m) {
        rep.ok = false;
        rep.messages.push_back(std::move(m));
    };
    for (const auto& [id, cells] : g.carrier) {
        if (!x.has_cell(id)) fail("carrier source '" + id + "' is not a cell");
        for (const auto& t : cells)
            if (!y.has_cell(t)) fail("carrier target '" + t + "' is not a cell");
    }
    if (!rep.ok) return rep;
    for (const auto& [id, c] : x.cells()) {
        const auto& car = g.carrier_of(id);
        if (c.dim == 0 && car.size() > 1) fail("vertex '" + id + "' maps to more than one cell");
        if (c.dim == 0 && car.size() == 1 && y.cell(*car.begin()).dim != 0)
            fail("vertex '" + id + "' maps to a positive-dimensional cell");
        for (const auto& t : car)
            if (y.cell(t).dim > c.dim)
                fail("carrier of '" + id + "' contains higher-dimensional cell '" + t + "'");
        // Boundary closure: carriers of facets lie in the closure of the
        // cell's carrier.
        std::set<std::string> closure;
        for (const auto& t : car) {
            auto cl = y.closure(t);
            closure.insert(cl.begin(), cl.end());
        }
        for (const auto& [fid, s] : c.boundary)
            for (const auto& t : g.carrier_of(fid))
                if (!closure.count(t))
                    fail("facet '" + fid + "' carrier leaves the closure of '" + id + "'");
    }
    return rep;
}

LabelMap label_map(const CellularMap& g, const LabeledComplex& x, const LabeledComplex& y) {
    LabelMap lm;
    for (const auto& [id, l] : x.vertex_labels()) {
        const auto& car = g.carrier_of(id);
        if (car.empty()) {
            lm.image[id] = std::nullopt;
            continue;
        }
        Exponent m = y.ring().zero();
        for (const auto& t : car) m = lcm_exp(m, y.label(t));
        lm.image[id] = m;
    }
    return lm;
}

GradedMatrix ChainMap::at_or_zero(int i, const CellularFreeComplex& f,
                                  const CellularFreeComplex& g) const {
    auto it = parts.find(i);
    if (it != parts.end()) return it->second;
    GradedFreeModule empty_src(f.ring), empty_tgt(g.ring);
    const GradedFreeModule& src = (i >= 0 && i <= f.top_degree()) ? f.module(i) : empty_src;
    const GradedFreeModule& tgt = (i >= 0 && i <= g.top_degree()) ? g.module(i) : empty_tgt;
    return GradedMatrix(tgt, src);
}

ChainMap ChainMap::identity_on(const CellularFreeComplex& f) {
    ChainMap id;
    for (int i = 0; i <= f.top_degree(); ++i)
        id.parts.emplace(i, GradedMatrix::identity(f.module(i)));
    return id;
}

ChainMapReport verify_chain_map(const ChainMap& f, const CellularFreeComplex& F,
                                const CellularFreeComplex& G) {
    ChainMapReport rep;
    int top = std::max(F.top_degree(), G.top_degree());
    for (const auto& [i, m] : f.parts) top = std::max(top, i);
    for (int i = 1; i <= top + 1; ++i) {
        if (i == 1 && !f.has(0)) continue;  // augmentation part absent: skip
        GradedMatrix lhs = matrix_compose(G.differential(i), f.at_or_zero(i, F, G));
        GradedMatrix rhs = matrix_compose(f.at_or_zero(i - 1, F, G), F.differential(i));
        if (lhs != rhs) {
            rep.ok = false;
            rep.failing_square = i;
            rep.message = "square " + std::to_string(i) + " does not commute";
            return rep;
        }
    }
    return rep;
}

namespace {

// Component-level carrier: for every source component, the set of target
// components met by its cells' carriers.
std::vector<std::set<int>> component_carriers(const CellularMap& g, const LabeledComplex& x,
                                              const LabeledComplex& y) {
    auto xcomps = x.components();
    auto ycomps = y.components();
    std::map<std::string, int> ycomp_of;
    for (std::size_t k = 0; k < ycomps.size(); ++k)
        for (const auto& id : ycomps[k]) ycomp_of[id] = static_cast<int>(k);
    std::vector<std::set<int>> out(xcomps.size());
    for (std::size_t k = 0; k < xcomps.size(); ++k)
        for (const auto& id : xcomps[k])
            for (const auto& t : g.carrier_of(id)) out[k].insert(ycomp_of.at(t));
    return out;
}

}  // namespace

CompatibilityReport verify_compatible(const ChainMap& f, const CellularMap& g,
                                      const CellularFreeComplex& F, const CellularFreeComplex& G,
                                      CompatibilityMode mode) {
    CompatibilityReport rep;
    auto fail = [&rep](std::string m) {
        rep.ok = false;
        rep.messages.push_back(std::move(m));
    };
    if (!F.link || !G.link) {
        fail("compatibility needs linked complexes");
        return rep;
    }
    const LabeledComplex& X = F.link->complex;
    const LabeledComplex& Y = G.link->complex;

    // (a) the degree-0 part realizes the component carrier.
    if (f.has(0)) {
        auto comp_car = component_carriers(g, X, Y);
        const GradedMatrix& f0 = f.parts.at(0);
        for (std::size_t c = 0; c < F.module(0).rank(); ++c) {
            int xcomp = F.link->component_of_gen.at(F.module(0).generator(c).id);
            std::set<int> expect = (xcomp >= 0 && static_cast<std::size_t>(xcomp) < comp_car.size())
                                       ? comp_car[static_cast<std::size_t>(xcomp)]
                                       : std::set<int>{};
            std::set<int> got;
            for (std::size_t r = 0; r < G.module(0).rank(); ++r) {
                if (f0.entry(r, c).is_zero()) continue;
                got.insert(G.link->component_of_gen.at(G.module(0).generator(r).id));
            }
            if (expect.size() > 1) fail("carrier spreads one source component over several targets");
            if (expect.empty() && !got.empty())
                fail("degree-0 part is nonzero on a component with empty carrier");
            if (!expect.empty() && got != expect)
                fail("degree-0 part does not realize the component carrier");
        }
    }

    // (b) support containment per cell.
    for (const auto& [id, c] : X.cells()) {
        int hom = c.dim + 1;
        std::set<std::string> allowed;
        for (const auto& t : g.carrier_of(id))
            if (Y.cell(t).dim == c.dim) allowed.insert(t);
        std::set<std::string> support;
        if (f.has(hom)) {
            const GradedMatrix& fi = f.parts.at(hom);
            int col = F.module(hom).index_of(id);
            if (col < 0) {
                fail("generator '" + id + "' missing in degree " + std::to_string(hom));
                continue;
            }
            for (std::size_t r = 0; r < fi.rows(); ++r)
                if (!fi.entry(r, static_cast<std::size_t>(col)).is_zero())
                    support.insert(G.module(hom).generator(r).id);
        }
        if (g.carrier_of(id).empty() && !support.empty())
            fail("cell '" + id + "' has empty carrier but nonzero image");
        for (const auto& sid : support)
            if (!allowed.count(sid))
                fail("image of '" + id + "' touches '" + sid + "' outside its carrier");
        if (mode == CompatibilityMode::StrictSupport && support != allowed)
            fail("strict mode: support of '" + id + "' differs from its carrier");
    }
    return rep;
}

CellResMorphism make_morphism(const CellularFreeComplex& source, const CellularFreeComplex& target,
                              ChainMap chain, CellularMap cell, CompatibilityMode mode) {
    if (!source.link || !target.link) throw ResolutionError("morphisms need linked complexes");
    auto cellrep = validate_cellular(cell, source.link->complex, target.link->complex);
    if (!cellrep.ok) throw ResolutionError("invalid cellular map: " + cellrep.messages.front());
    auto chainrep = verify_chain_map(chain, source, target);
    if (!chainrep.ok) throw ResolutionError("invalid chain map: " + chainrep.message);
    auto comprep = verify_compatible(chain, cell, source, target, mode);
    if (!comprep.ok) throw ResolutionError("incompatible pair: " + comprep.messages.front());
    CellResMorphism m{source, target, std::move(chain), std::move(cell), true};
    return m;
}

SynthesisResult chain_map_from_cellular(const CellularMap& g, const CellularFreeComplex& F,
                                        const CellularFreeComplex& G) {
    SynthesisResult result;
    if (!F.link || !G.link) throw ResolutionError("synthesis needs linked complexes");
    const LabeledComplex& X = F.link->complex;
    const LabeledComplex& Y = G.link->complex;

    ChainMap chain;
    // Vertex part: unit entries on the carriers.
    if (F.top_degree() >= 1 && G.top_degree() >= 1) {
        GradedMatrix f1(G.module(1), F.module(1));
        for (std::size_t c = 0; c < F.module(1).rank(); ++c) {
            const std::string& vid = F.module(1).generator(c).id;
            for (const auto& t : g.carrier_of(vid)) {
                int r = G.module(1).index_of(t);
                if (r >= 0)
                    f1.set_entry(static_cast<std::size_t>(r), c,
                                 Polynomial::constant(Rational(1), F.ring.nvars()));
            }
        }
        chain.parts.emplace(1, std::move(f1));
    }

    // Higher parts, solved square by square over the carrier support.
    for (int i = 2; i <= F.top_degree(); ++i) {
        GradedMatrix rhs = matrix_compose(chain.at_or_zero(i - 1, F, G), F.differential(i));
        if (i > G.top_degree()) {
            if (!rhs.is_zero()) {
                result.failed_square = i;
                return result;
            }
            continue;
        }
        MatrixProblem prob;
        MatrixUnknown u;
        u.target = G.module(i);
        u.source = F.module(i);
        u.mode = MatrixUnknown::Mode::FromRhs;
        std::set<std::pair<std::size_t, std::size_t>> support;
        for (std::size_t c = 0; c < F.module(i).rank(); ++c) {
            const std::string& id = F.module(i).generator(c).id;
            for (const auto& t : g.carrier_of(id)) {
                int r = G.module(i).index_of(t);
                if (r >= 0) support.insert({static_cast<std::size_t>(r), c});
            }
        }
        u.support = std::move(support);
        std::size_t idx = prob.add_unknown(std::move(u));
        prob.add_equation({{LinearTerm{G.differential(i), idx, std::nullopt, Rational(1)}}, rhs});
        auto sol = prob.solve();
        if (!sol) {
            result.failed_square = i;
            return result;
        }
        chain.parts.emplace(i, std::move((*sol)[0]));
    }

    // Augmentation part last, over the component-carrier support.
    {
        GradedMatrix rhs = matrix_compose(G.differential(1), chain.at_or_zero(1, F, G));
        MatrixProblem prob;
        MatrixUnknown u;
        u.target = G.module(0);
        u.source = F.module(0);
        u.mode = MatrixUnknown::Mode::FromRhs;
        auto comp_car = component_carriers(g, X, Y);
        std::map<int, std::size_t> grow;  // target component -> row
        for (std::size_t r = 0; r < G.module(0).rank(); ++r)
            grow[G.link->component_of_gen.at(G.module(0).generator(r).id)] = r;
        std::set<std::pair<std::size_t, std::size_t>> support;
        for (std::size_t c = 0; c < F.module(0).rank(); ++c) {
            int xcomp = F.link->component_of_gen.at(F.module(0).generator(c).id);
            if (xcomp < 0 || static_cast<std::size_t>(xcomp) >= comp_car.size()) continue;
            for (int ty : comp_car[static_cast<std::size_t>(xcomp)])
                support.insert({grow.at(ty), c});
        }
        u.support = std::move(support);
        std::size_t idx = prob.add_unknown(std::move(u));
        prob.add_equation({{LinearTerm{std::nullopt, idx, F.differential(1), Rational(1)}}, rhs});
        auto sol = prob.solve();
        if (!sol) {
            result.failed_square = 1;
            return result;
        }
        chain.parts.emplace(0, std::move((*sol)[0]));
    }

    result.chain = std::move(chain);
    return result;
}

CellResMorphism morphism_from_cellular(const CellularMap& g, const CellularFreeComplex& F,
                                       const CellularFreeComplex& G) {
    SynthesisResult s = chain_map_from_cellular(g, F, G);
    if (!s.chain)
        throw ResolutionError("no compatible chain map; square " + std::to_string(s.failed_square) +
                              " has no solution");
    return make_morphism(F, G, std::move(*s.chain), g);
}

CellResMorphism identity_morphism(const CellularFreeComplex& f) {
    if (!f.link) throw ResolutionError("identity morphism needs a linked complex");
    return make_morphism(f, f, ChainMap::identity_on(f), CellularMap::identity_on(f.link->complex));
}

CellResMorphism compose(const CellResMorphism& second, const CellResMorphism& first) {
    if (first.target.ranks() != second.source.ranks())
        throw ResolutionError("morphism composition: middle objects differ");
    ChainMap chain;
    int top = std::max(first.source.top_degree(), first.target.top_degree());
    top = std::max(top, second.target.top_degree());
    for (int i = 0; i <= top; ++i) {
        if (i == 0 && (!first.chain.has(0) || !second.chain.has(0))) continue;
        GradedMatrix a = second.chain.at_or_zero(i, second.source, second.target);
        GradedMatrix b = first.chain.at_or_zero(i, first.source, first.target);
        chain.parts.emplace(i, matrix_compose(a, b));
    }
    CellularMap cell;
    for (const auto& [id, car] : first.cell.carrier) {
        std::set<std::string> out;
        for (const auto& mid : car) {
            const auto& next = second.cell.carrier_of(mid);
            out.insert(next.begin(), next.end());
        }
        cell.carrier[id] = std::move(out);
    }
    return make_morphism(first.source, second.target, std::move(chain), std::move(cell));
}

const ChainMap& forget_chain(const CellResMorphism& m) { return m.chain; }
const CellularMap& forget_cell(const CellResMorphism& m) { return m.cell; }

std::optional<std::vector<GradedMatrix>> find_chain_homotopy(
    const ChainMap& f, const ChainMap& g, const CellularFreeComplex& F,
    const CellularFreeComplex& G, const Exponent& shift) {
    MatrixProblem prob;
    int top = F.top_degree();
    std::vector<std::size_t> hidx;
    GradedFreeModule empty(G.ring);
    for (int i = 0; i <= top; ++i) {
        MatrixUnknown u;
        u.source = F.module(i);
        u.target = (i + 1 <= G.top_degree()) ? G.module(i + 1) : empty;
        u.mode = MatrixUnknown::Mode::HomogeneousShift;
        u.shift = shift;
        hidx.push_back(prob.add_unknown(std::move(u)));
    }
    for (int i = 0; i <= top; ++i) {
        GradedMatrix rhs = f.at_or_zero(i, F, G) - g.at_or_zero(i, F, G);
        MatrixEquation eq;
        eq.rhs = std::move(rhs);
        eq.terms.push_back(LinearTerm{G.differential(i + 1), hidx[static_cast<std::size_t>(i)],
                                      std::nullopt, Rational(1)});
        if (i >= 1)
            eq.terms.push_back(LinearTerm{std::nullopt, hidx[static_cast<std::size_t>(i - 1)],
                                          F.differential(i), Rational(1)});
        prob.add_equation(std::move(eq));
    }
    return prob.solve();
}

Contiguity contiguity_check(const CellularMap& g1, const CellularMap& g2,
                            const LabeledComplex& x, const LabeledComplex& y) {
    auto ycomps = y.components();
    std::map<std::string, int> ycomp_of;
    for (std::size_t k = 0; k < ycomps.size(); ++k)
        for (const auto& id : ycomps[k]) ycomp_of[id] = static_cast<int>(k);

    bool contiguous = true;
    bool split = false;
    for (const auto& [id, c] : x.cells()) {
        std::set<std::string> joint = g1.carrier_of(id);
        const auto& c2 = g2.carrier_of(id);
        joint.insert(c2.begin(), c2.end());
        if (joint.empty()) continue;
        std::set<int> comps;
        for (const auto& t : joint) comps.insert(ycomp_of.at(t));
        if (comps.size() > 1) split = true;
        bool inside_one_cell = false;
        for (const auto& [zid, z] : y.cells()) {
            auto cl = y.closure(zid);
            bool all = std::all_of(joint.begin(), joint.end(),
                                   [&](const std::string& t) { return cl.count(t) > 0; });
            if (all) {
                inside_one_cell = true;
                break;
            }
        }
        if (!inside_one_cell) contiguous = false;
    }
    if (contiguous) return Contiguity::Contiguous;
    if (split) return Contiguity::NotContiguous;
    return Contiguity::Unknown;
}

std::optional<Exponent> uniform_shift(const ChainMap& f, const CellularFreeComplex& F,
                                      const CellularFreeComplex& G) {
    std::optional<Exponent> shift;
    for (const auto& [i, m] : f.parts) {
        const GradedFreeModule& src = m.source();
        const GradedFreeModule& tgt = m.target();
        for (const auto& [pos, p] : m.entries()) {
            if (!p.is_single_term()) return std::nullopt;
            Exponent s = sub_exp(add_exp(p.sole_exponent(), tgt.degree(pos.first)),
                                 src.degree(pos.second));
            if (!is_nonnegative(s)) return std::nullopt;
            if (!shift)
                shift = s;
            else if (*shift != s)
                return std::nullopt;
        }
    }
    if (!shift) shift = F.ring.zero();
    return shift;
}

}  // namespace cellres
