#include "cellres/complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cellres {

bool FieldChainComplex::boundaries_compose_to_zero() const {
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
        const QMatrix& a = boundaries[i];
        const QMatrix& b = boundaries[i + 1];
        if (a.cols() != b.rows()) return false;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) {
                Rational s(0);
                for (std::size_t k = 0; k < a.cols(); ++k) s += a.at(r, k) * b.at(k, c);
                if (field.is_rationals() ? (s != 0) : (reduce_mod_p(s, field.p) != 0))
                    return false;
            }
    }
    return true;
}

std::vector<std::size_t> FieldChainComplex::homology_ranks() const {
    std::vector<std::size_t> ranks(dims.size(), 0);
    std::vector<std::size_t> brank(dims.size() + 1, 0);
    for (std::size_t i = 0; i < boundaries.size(); ++i) brank[i + 1] = boundaries[i].rank(field);
    // boundaries[i] : degree i+1 -> degree i, so rank at degree i uses
    // brank[i] (outgoing) and brank[i+1] (incoming).
    for (std::size_t i = 0; i < dims.size(); ++i) {
        std::size_t out = brank[i];  // boundary map leaving degree i
        std::size_t in = i + 1 <= boundaries.size() ? brank[i + 1] : 0;
        ranks[i] = dims[i] - out - in;
    }
    return ranks;
}

int LabeledComplex::dim() const {
    int d = -1;
    for (const auto& [id, c] : cells_) d = std::max(d, c.dim);
    return d;
}

void LabeledComplex::add_cell(Cell cell) {
    if (cell.dim < 0) throw std::invalid_argument("cell dimension must be >= 0");
    if (cells_.count(cell.id)) throw std::invalid_argument("duplicate cell id '" + cell.id + "'");
    if (cell.dim == 0 && !cell.boundary.empty())
        throw std::invalid_argument("0-cell with nonempty boundary");
    cells_.emplace(cell.id, std::move(cell));
}

void LabeledComplex::add_vertex(const std::string& id, Exponent label) {
    add_cell({id, 0, {}});
    set_vertex_label(id, std::move(label));
}

void LabeledComplex::set_vertex_label(const std::string& id, Exponent label) {
    auto it = cells_.find(id);
    if (it == cells_.end() || it->second.dim != 0)
        throw std::invalid_argument("vertex label target '" + id + "' is not a 0-cell");
    if (label.size() != ring_.nvars()) throw DimensionError("label length does not match ring");
    if (!is_nonnegative(label)) throw std::invalid_argument("label has negative exponent");
    vertex_labels_[id] = std::move(label);
}

void LabeledComplex::set_label_override(const std::string& id, Exponent label) {
    if (!cells_.count(id)) throw std::invalid_argument("override target '" + id + "' missing");
    if (label.size() != ring_.nvars()) throw DimensionError("label length does not match ring");
    label_overrides_[id] = std::move(label);
}

const Cell& LabeledComplex::cell(const std::string& id) const {
    auto it = cells_.find(id);
    if (it == cells_.end()) throw std::invalid_argument("no cell '" + id + "'");
    return it->second;
}

std::vector<std::string> LabeledComplex::cells_of_dim(int d) const {
    std::vector<std::string> out;
    for (const auto& [id, c] : cells_)
        if (c.dim == d) out.push_back(id);
    return out;
}

std::set<std::string> LabeledComplex::closure(const std::string& id) const {
    std::set<std::string> seen;
    std::vector<std::string> stack{id};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        for (const auto& [fid, sign] : cell(cur).boundary) stack.push_back(fid);
    }
    return seen;
}

Exponent LabeledComplex::label(const std::string& id) const {
    auto ov = label_overrides_.find(id);
    if (ov != label_overrides_.end()) return ov->second;
    Exponent result = ring_.zero();
    for (const auto& cid : closure(id)) {
        auto it = vertex_labels_.find(cid);
        if (it != vertex_labels_.end()) result = lcm_exp(result, it->second);
    }
    return result;
}

std::vector<std::vector<std::string>> LabeledComplex::components() const {
    std::map<std::string, std::string> parent;
    for (const auto& [id, c] : cells_) parent[id] = id;
    std::function<std::string(const std::string&)> find = [&](const std::string& a) {
        std::string root = a;
        while (parent[root] != root) root = parent[root];
        std::string cur = a;
        while (parent[cur] != root) {
            std::string next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        return root;
    };
    auto unite = [&](const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    };
    for (const auto& [id, c] : cells_)
        for (const auto& [fid, s] : c.boundary) unite(id, fid);

    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& [id, c] : cells_) groups[find(id)].push_back(id);
    std::vector<std::vector<std::string>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    // groups map is keyed by the least member, so the order is already
    // deterministic (lexicographic by representative).
    return out;
}

int LabeledComplex::component_of(const std::string& id) const {
    auto comps = components();
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (std::binary_search(comps[i].begin(), comps[i].end(), id)) return static_cast<int>(i);
    return -1;
}

ValidationReport LabeledComplex::validate_cw() const {
    ValidationReport rep;
    for (const auto& [id, c] : cells_) {
        for (const auto& [fid, s] : c.boundary) {
            if (!cells_.count(fid)) {
                rep.facet_dims_ok = false;
                rep.messages.push_back("cell " + id + " references missing facet " + fid);
                continue;
            }
            if (cells_.at(fid).dim != c.dim - 1) {
                rep.facet_dims_ok = false;
                rep.messages.push_back("cell " + id + " facet " + fid + " is not codimension 1");
            }
            if (s != 1 && s != -1) {
                rep.facet_dims_ok = false;
                rep.messages.push_back("cell " + id + " facet " + fid + " has sign " +
                                       std::to_string(s));
            }
        }
        if (c.dim == 0) {
            auto it = vertex_labels_.find(id);
            if (it == vertex_labels_.end()) {
                rep.facet_dims_ok = false;
                rep.messages.push_back("vertex " + id + " has no label");
            }
        }
    }
    if (!rep.facet_dims_ok) {
        rep.d_squared_ok = false;
        return rep;
    }

    // Integral boundary-squared, including the augmentation level: the
    // signed endpoint count of every 1-cell vanishes, and the two-step
    // incidence over every codimension-2 cell sums to zero.
    for (const auto& [id, c] : cells_) {
        if (c.dim < 1) continue;
        std::map<std::string, int64_t> first;
        for (const auto& [fid, s] : c.boundary) first[fid] += s;
        if (c.dim == 1) {
            int64_t aug = 0;
            for (const auto& [fid, s] : first) aug += s;
            if (aug != 0) {
                rep.d_squared_ok = false;
                rep.messages.push_back("d^2 != 0 at 1-cell " + id + " (augmented value " +
                                       std::to_string(aug) + ")");
            }
            continue;
        }
        std::map<std::string, int64_t> twostep;
        for (const auto& [fid, s] : first)
            for (const auto& [gid, t] : cell(fid).boundary) twostep[gid] += s * t;
        for (const auto& [gid, v] : twostep) {
            if (v != 0) {
                rep.d_squared_ok = false;
                rep.messages.push_back("d^2 != 0 at cell " + id + " over face " + gid +
                                       " (value " + std::to_string(v) + ")");
            }
        }
    }

    // Diamond condition: between a cell and each codimension-2 face of its
    // closure there are exactly two intermediate cells. The empty face
    // counts as the unique (-1)-cell, so every 1-cell needs two distinct
    // endpoints.
    for (const auto& [id, c] : cells_) {
        if (c.dim < 1) continue;
        std::map<std::string, int> mid_count;  // codim-2 face -> #intermediates
        std::set<std::string> facet_set;
        std::map<std::string, int64_t> first;
        for (const auto& [fid, s] : c.boundary) first[fid] += s;
        int empty_face_mids = 0;
        for (const auto& [fid, s] : first) {
            if (s == 0) continue;
            facet_set.insert(fid);
            const Cell& f = cell(fid);
            if (f.dim == 0) {
                ++empty_face_mids;
                continue;
            }
            std::set<std::string> subfacets;
            for (const auto& [gid, t] : f.boundary)
                if (t != 0) subfacets.insert(gid);
            for (const auto& gid : subfacets) ++mid_count[gid];
        }
        if (c.dim == 1) {
            if (empty_face_mids != 2) {
                rep.diamond_ok = false;
                rep.messages.push_back("1-cell " + id + " has " +
                                       std::to_string(empty_face_mids) +
                                       " distinct endpoints (expected 2)");
            }
            continue;
        }
        for (const auto& [gid, n] : mid_count) {
            if (n != 2) {
                rep.diamond_ok = false;
                rep.messages.push_back("diamond fails between " + id + " and " + gid + " (" +
                                       std::to_string(n) + " intermediates)");
            }
        }
    }
    return rep;
}

LabeledComplex simplex_complex(const Ring& ring, const std::vector<Exponent>& vertex_labels) {
    if (vertex_labels.empty()) throw std::invalid_argument("simplex needs at least one vertex");
    LabeledComplex x(ring);
    std::size_t r = vertex_labels.size();
    auto face_id = [](const std::vector<std::size_t>& vs) {
        std::ostringstream out;
        out << "c";
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "_" : "") << vs[i];
        return out.str();
    };
    // Subsets in increasing size so facets exist before cofaces.
    std::vector<std::vector<std::size_t>> by_size[2];
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t mask = 1; mask < (1u << r); ++mask) {
        std::vector<std::size_t> vs;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1u << i)) vs.push_back(i);
        faces.push_back(std::move(vs));
    }
    std::sort(faces.begin(), faces.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& vs : faces) {
        Cell c;
        c.id = face_id(vs);
        c.dim = static_cast<int>(vs.size()) - 1;
        for (std::size_t k = 0; k < vs.size() && vs.size() > 1; ++k) {
            std::vector<std::size_t> facet = vs;
            facet.erase(facet.begin() + static_cast<long>(k));
            c.boundary.emplace_back(face_id(facet), (k % 2 == 0) ? 1 : -1);
        }
        x.add_cell(std::move(c));
        if (vs.size() == 1) x.set_vertex_label(face_id(vs), vertex_labels[vs[0]]);
    }
    return x;
}

LabeledComplex subcomplex_leq(const LabeledComplex& x, const Exponent& b, bool strict) {
    std::set<std::string> keep;
    for (const auto& [id, c] : x.cells()) {
        Exponent l = x.label(id);
        if (divides(l, b) && (!strict || l != b)) keep.insert(id);
    }
    return restrict_to_cells(x, keep);
}

LabeledComplex restrict_to_cells(const LabeledComplex& x, const std::set<std::string>& keep) {
    LabeledComplex out(x.ring());
    std::vector<const Cell*> ordered;
    for (const auto& id : keep) ordered.push_back(&x.cell(id));
    std::sort(ordered.begin(), ordered.end(),
              [](const Cell* a, const Cell* b) { return a->dim < b->dim; });
    for (const Cell* c : ordered) {
        Cell copy = *c;
        for (const auto& [fid, s] : copy.boundary)
            if (!keep.count(fid))
                throw GluingError("restriction set not closed under boundary at " + copy.id);
        out.add_cell(copy);
        if (c->dim == 0) out.set_vertex_label(c->id, x.vertex_labels().at(c->id));
    }
    for (const auto& [id, l] : x.label_overrides())
        if (keep.count(id)) out.set_label_override(id, l);
    return out;
}

std::string join_pair_id(const std::string& a, const std::string& b) {
    return "A." + a + "*B." + b;
}

std::string product_pair_id(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

LabeledComplex join_complex(const LabeledComplex& x, const LabeledComplex& y) {
    LabeledComplex out(x.ring());
    if (x.ring() != y.ring()) throw DimensionError("join of complexes over different rings");
    // Copies of the factors.
    for (const auto& [id, c] : x.cells()) {
        Cell copy;
        copy.id = "A." + id;
        copy.dim = c.dim;
        for (const auto& [fid, s] : c.boundary) copy.boundary.emplace_back("A." + fid, s);
        out.add_cell(std::move(copy));
        if (c.dim == 0) out.set_vertex_label("A." + id, x.vertex_labels().at(id));
    }
    for (const auto& [id, c] : y.cells()) {
        Cell copy;
        copy.id = "B." + id;
        copy.dim = c.dim;
        for (const auto& [fid, s] : c.boundary) copy.boundary.emplace_back("B." + fid, s);
        out.add_cell(std::move(copy));
        if (c.dim == 0) out.set_vertex_label("B." + id, y.vertex_labels().at(id));
    }
    // Mixed cells s*t with d(s*t) = ds*t + (-1)^(dim s + 1) s*dt, where the
    // empty-face convention turns ds*t into the Y-copy for 0-cells s.
    std::vector<std::pair<const Cell*, const Cell*>> pairs;
    for (const auto& [ida, ca] : x.cells())
        for (const auto& [idb, cb] : y.cells()) pairs.emplace_back(&ca, &cb);
    std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
        return p.first->dim + p.second->dim < q.first->dim + q.second->dim;
    });
    for (const auto& [ca, cb] : pairs) {
        Cell c;
        c.id = join_pair_id(ca->id, cb->id);
        c.dim = ca->dim + cb->dim + 1;
        if (ca->dim == 0) {
            c.boundary.emplace_back("B." + cb->id, 1);
        } else {
            for (const auto& [fid, s] : ca->boundary)
                c.boundary.emplace_back(join_pair_id(fid, cb->id), s);
        }
        int sign = (ca->dim + 1) % 2 == 0 ? 1 : -1;
        if (cb->dim == 0) {
            c.boundary.emplace_back("A." + ca->id, sign);
        } else {
            for (const auto& [fid, s] : cb->boundary)
                c.boundary.emplace_back(join_pair_id(ca->id, fid), sign * s);
        }
        out.add_cell(std::move(c));
    }
    return out;
}

LabeledComplex disjoint_union(const LabeledComplex& x, const LabeledComplex& y) {
    if (x.ring() != y.ring()) throw DimensionError("union of complexes over different rings");
    LabeledComplex out(x.ring());
    auto copy_in = [&out](const LabeledComplex& src, const std::string& prefix) {
        for (const auto& [id, c] : src.cells()) {
            Cell copy;
            copy.id = prefix + id;
            copy.dim = c.dim;
            for (const auto& [fid, s] : c.boundary) copy.boundary.emplace_back(prefix + fid, s);
            out.add_cell(std::move(copy));
            if (c.dim == 0) out.set_vertex_label(prefix + id, src.vertex_labels().at(id));
        }
        for (const auto& [id, l] : src.label_overrides()) out.set_label_override(prefix + id, l);
    };
    copy_in(x, "A.");
    copy_in(y, "B.");
    return out;
}

LabeledComplex glue_complexes(const LabeledComplex& x, const LabeledComplex& y,
                              const std::map<std::string, std::string>& identification) {
    if (x.ring() != y.ring()) throw DimensionError("gluing complexes over different rings");
    // Validate: domain closed under boundary, dimension preserved, signed
    // boundaries match through the identification.
    std::set<std::string> range;
    for (const auto& [xa, yb] : identification) {
        const Cell& cx = x.cell(xa);
        const Cell& cy = y.cell(yb);
        if (!range.insert(yb).second) throw GluingError("identification is not injective at " + yb);
        if (cx.dim != cy.dim) throw GluingError("identification changes dimension at " + xa);
        std::map<std::string, int64_t> want;
        for (const auto& [fid, s] : cy.boundary) want[fid] += s;
        std::map<std::string, int64_t> got;
        for (const auto& [fid, s] : cx.boundary) {
            auto it = identification.find(fid);
            if (it == identification.end())
                throw GluingError("identification not closed under boundary at " + fid);
            got[it->second] += s;
        }
        if (want != got) throw GluingError("identification does not preserve boundary at " + xa);
    }

    LabeledComplex out(x.ring());
    auto xname = [&](const std::string& id) {
        auto it = identification.find(id);
        return it != identification.end() ? "B." + it->second : "A." + id;
    };
    // Y cells keep their (namespaced) ids; identified X cells merge in.
    for (const auto& [id, c] : y.cells()) {
        Cell copy;
        copy.id = "B." + id;
        copy.dim = c.dim;
        for (const auto& [fid, s] : c.boundary) copy.boundary.emplace_back("B." + fid, s);
        out.add_cell(std::move(copy));
        if (c.dim == 0) {
            Exponent l = y.vertex_labels().at(id);
            out.set_vertex_label("B." + id, l);
        }
    }
    for (const auto& [id, c] : x.cells()) {
        if (identification.count(id)) continue;
        Cell copy;
        copy.id = "A." + id;
        copy.dim = c.dim;
        for (const auto& [fid, s] : c.boundary) copy.boundary.emplace_back(xname(fid), s);
        out.add_cell(std::move(copy));
        if (c.dim == 0) out.set_vertex_label("A." + id, x.vertex_labels().at(id));
    }
    // Identified vertices carry the lcm of the glued labels.
    for (const auto& [xa, yb] : identification) {
        if (x.cell(xa).dim != 0) continue;
        Exponent merged = lcm_exp(x.vertex_labels().at(xa), y.vertex_labels().at(yb));
        out.set_vertex_label("B." + yb, merged);
    }
    for (const auto& [id, l] : y.label_overrides()) out.set_label_override("B." + id, l);
    for (const auto& [id, l] : x.label_overrides())
        if (!identification.count(id)) out.set_label_override("A." + id, l);
    return out;
}

LabeledComplex product_complex(const LabeledComplex& x, const LabeledComplex& y) {
    if (x.ring() != y.ring()) throw DimensionError("product of complexes over different rings");
    LabeledComplex out(x.ring());
    std::vector<std::pair<const Cell*, const Cell*>> pairs;
    for (const auto& [ida, ca] : x.cells())
        for (const auto& [idb, cb] : y.cells()) pairs.emplace_back(&ca, &cb);
    std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
        return p.first->dim + p.second->dim < q.first->dim + q.second->dim;
    });
    for (const auto& [ca, cb] : pairs) {
        Cell c;
        c.id = product_pair_id(ca->id, cb->id);
        c.dim = ca->dim + cb->dim;
        std::string id = c.id;
        bool is_vertex = c.dim == 0;
        for (const auto& [fid, s] : ca->boundary)
            c.boundary.emplace_back(product_pair_id(fid, cb->id), s);
        int sign = ca->dim % 2 == 0 ? 1 : -1;
        for (const auto& [fid, s] : cb->boundary)
            c.boundary.emplace_back(product_pair_id(ca->id, fid), sign * s);
        out.add_cell(std::move(c));
        if (is_vertex)
            out.set_vertex_label(id, lcm_exp(x.vertex_labels().at(ca->id),
                                             y.vertex_labels().at(cb->id)));
    }
    return out;
}

FieldChainComplex reduced_chain_complex(const LabeledComplex& x, const FieldSpec& field) {
    FieldChainComplex out;
    out.field = field;
    out.min_degree = -1;
    int top = x.dim();
    // One (-1)-cell (the empty face) even for the empty complex.
    out.dims.push_back(1);
    std::vector<std::vector<std::string>> strata;
    for (int d = 0; d <= top; ++d) {
        strata.push_back(x.cells_of_dim(d));
        out.dims.push_back(strata.back().size());
    }
    if (top >= 0) {
        // Augmentation: every vertex maps to the empty face with sign +1.
        QMatrix aug(1, strata[0].size());
        for (std::size_t c = 0; c < strata[0].size(); ++c) aug.at(0, c) = Rational(1);
        out.boundaries.push_back(std::move(aug));
    }
    for (int d = 1; d <= top; ++d) {
        std::map<std::string, std::size_t> row_of;
        for (std::size_t i = 0; i < strata[d - 1].size(); ++i) row_of[strata[d - 1][i]] = i;
        QMatrix m(strata[d - 1].size(), strata[d].size());
        for (std::size_t c = 0; c < strata[d].size(); ++c) {
            for (const auto& [fid, s] : x.cell(strata[d][c]).boundary)
                m.at(row_of.at(fid), c) += rational_of(s);
        }
        out.boundaries.push_back(std::move(m));
    }
    return out;
}

std::vector<std::size_t> reduced_homology_ranks(const LabeledComplex& x, const FieldSpec& field) {
    return reduced_chain_complex(x, field).homology_ranks();
}

bool labels_monotone(const LabeledComplex& x) {
    for (const auto& [id, c] : x.cells()) {
        Exponent l = x.label(id);
        for (const auto& [fid, s] : c.boundary)
            if (!divides(x.label(fid), l)) return false;
    }
    return true;
}

}  // namespace cellres
