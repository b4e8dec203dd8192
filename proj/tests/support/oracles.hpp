#pragma once

// Test-only oracles, written independently of the library code paths they
// check: fraction-free rank, reduced simplicial homology by direct
// enumeration, Taylor-resolution Betti numbers, and random labeled-complex
// generators. Everything here works from first definitions on small data.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cellres/complex.hpp"
#include "cellres/resolution.hpp"

namespace oracles {

using cellres::Exponent;

// Rank of an integer matrix over Q via Bareiss fraction-free elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<long long>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    long long prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k)
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

// A simplicial complex as a set of faces (sorted vertex lists), together
// with vertex labels. Faces must include all their subsets.
struct SimplicialData {
    std::vector<Exponent> vertex_labels;
    std::set<std::vector<int>> faces;  // nonempty faces
};

inline std::vector<std::vector<int>> faces_of_dim(const SimplicialData& s, int d) {
    std::vector<std::vector<int>> out;
    for (const auto& f : s.faces)
        if (static_cast<int>(f.size()) == d + 1) out.push_back(f);
    return out;
}

// Reduced homology ranks over Q in degrees -1..dim, straight from the
// alternating-sign boundary formula.
inline std::vector<std::size_t> reduced_homology(const SimplicialData& s) {
    int top = -1;
    for (const auto& f : s.faces) top = std::max(top, static_cast<int>(f.size()) - 1);
    std::vector<std::vector<std::vector<int>>> strata;
    for (int d = 0; d <= top; ++d) strata.push_back(faces_of_dim(s, d));

    std::vector<std::size_t> dims;
    dims.push_back(1);  // empty face
    for (int d = 0; d <= top; ++d) dims.push_back(strata[static_cast<std::size_t>(d)].size());

    std::vector<std::size_t> ranks;
    // boundary from degree d to d-1 (degree -1 = empty face)
    for (int d = 0; d <= top; ++d) {
        const auto& high = strata[static_cast<std::size_t>(d)];
        std::vector<std::vector<long long>> m;
        if (d == 0) {
            m.assign(1, std::vector<long long>(high.size(), 1));
        } else {
            const auto& low = strata[static_cast<std::size_t>(d - 1)];
            std::map<std::vector<int>, std::size_t> row;
            for (std::size_t i = 0; i < low.size(); ++i) row[low[i]] = i;
            m.assign(low.size(), std::vector<long long>(high.size(), 0));
            for (std::size_t c = 0; c < high.size(); ++c)
                for (std::size_t k = 0; k < high[c].size(); ++k) {
                    std::vector<int> facet = high[c];
                    facet.erase(facet.begin() + static_cast<long>(k));
                    m[row.at(facet)][c] = (k % 2 == 0) ? 1 : -1;
                }
        }
        ranks.push_back(bareiss_rank(std::move(m)));
    }
    ranks.push_back(0);  // no boundary out of the top degree

    std::vector<std::size_t> h(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) {
        std::size_t out = i == 0 ? 0 : ranks[i - 1];
        std::size_t in = i < ranks.size() ? ranks[i] : 0;
        h[i] = dims[i] - out - in;
    }
    // h[0] is degree -1.
    return h;
}

inline Exponent lcm_of(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool div_leq(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponent face_label(const SimplicialData& s, const std::vector<int>& face) {
    Exponent l(s.vertex_labels[0].size(), 0);
    for (int v : face) l = lcm_of(l, s.vertex_labels[static_cast<std::size_t>(v)]);
    return l;
}

// Acyclicity of every label-bounded subcomplex, per connected component,
// checked over the join-closure of the labels. Direct restatement of the
// resolution criterion, evaluated with the oracle homology above.
inline bool is_resolution_oracle(const SimplicialData& s) {
    std::set<Exponent> degrees;
    Exponent zero(s.vertex_labels.empty() ? 0 : s.vertex_labels[0].size(), 0);
    degrees.insert(zero);
    for (const auto& l : s.vertex_labels) degrees.insert(l);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Exponent> snap(degrees.begin(), degrees.end());
        for (std::size_t i = 0; i < snap.size(); ++i)
            for (std::size_t j = i + 1; j < snap.size(); ++j)
                if (degrees.insert(lcm_of(snap[i], snap[j])).second) grew = true;
    }

    // Connected components via the 1-skeleton plus isolated vertices.
    std::size_t n = s.vertex_labels.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        std::vector<std::size_t> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (const auto& f : s.faces) {
                if (f.size() != 2) continue;
                if (std::find(f.begin(), f.end(), static_cast<int>(cur)) == f.end()) continue;
                for (int other : f) {
                    if (comp[static_cast<std::size_t>(other)] == -1) {
                        comp[static_cast<std::size_t>(other)] = ncomp;
                        stack.push_back(static_cast<std::size_t>(other));
                    }
                }
            }
        }
        ++ncomp;
    }

    for (const Exponent& b : degrees) {
        for (int k = 0; k < ncomp; ++k) {
            SimplicialData sub;
            sub.vertex_labels = s.vertex_labels;
            for (const auto& f : s.faces) {
                if (comp[static_cast<std::size_t>(f[0])] != k) continue;
                if (div_leq(face_label(s, f), b)) sub.faces.insert(f);
            }
            if (sub.faces.empty()) continue;
            auto h = reduced_homology(sub);
            for (std::size_t i = 1; i < h.size(); ++i)
                if (h[i] != 0) return false;
        }
    }
    return true;
}

// Random downward-closed simplicial complex on up to max_vertices vertices
// with random small labels; at most max_cells faces. Mixes acyclic and
// non-acyclic shapes.
inline SimplicialData random_complex(std::mt19937& rng, std::size_t nvars, int max_vertices = 4,
                                     std::size_t max_cells = 8) {
    std::uniform_int_distribution<int> vcount(1, max_vertices);
    std::uniform_int_distribution<int> expdist(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    SimplicialData s;
    int n = vcount(rng);
    for (int v = 0; v < n; ++v) {
        Exponent l(nvars, 0);
        for (std::size_t i = 0; i < nvars; ++i) l[i] = expdist(rng);
        s.vertex_labels.push_back(l);
        s.faces.insert({v});
    }
    // Randomly include higher faces, then close downward.
    std::vector<std::vector<int>> candidates;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> f;
        for (int v = 0; v < n; ++v)
            if (mask & (1 << v)) f.push_back(v);
        if (f.size() >= 2) candidates.push_back(f);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (const auto& f : candidates) {
        if (s.faces.size() >= max_cells) break;
        if (coin(rng)) continue;
        // add f and all subsets
        int m = static_cast<int>(f.size());
        for (int sub = 1; sub < (1 << m); ++sub) {
            std::vector<int> g;
            for (int i = 0; i < m; ++i)
                if (sub & (1 << i)) g.push_back(f[static_cast<std::size_t>(i)]);
            s.faces.insert(g);
        }
    }
    return s;
}

// Bridge into the library's complex type.
inline cellres::LabeledComplex to_labeled_complex(const SimplicialData& s,
                                                  const cellres::Ring& ring) {
    std::vector<Exponent> labels = s.vertex_labels;
    cellres::LabeledComplex x(ring);
    auto face_id = [](const std::vector<int>& f) {
        std::string id = "f";
        for (std::size_t i = 0; i < f.size(); ++i)
            id += (i ? "_" : "") + std::to_string(f[i]);
        return id;
    };
    std::vector<std::vector<int>> ordered(s.faces.begin(), s.faces.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& f : ordered) {
        cellres::Cell c;
        c.id = face_id(f);
        c.dim = static_cast<int>(f.size()) - 1;
        for (std::size_t k = 0; k < f.size() && f.size() > 1; ++k) {
            std::vector<int> facet = f;
            facet.erase(facet.begin() + static_cast<long>(k));
            c.boundary.emplace_back(face_id(facet), (k % 2 == 0) ? 1 : -1);
        }
        x.add_cell(c);
        if (f.size() == 1) x.set_vertex_label(face_id(f), labels[static_cast<std::size_t>(f[0])]);
    }
    return x;
}

// Minimal Betti numbers of S/I via an independently built Taylor complex:
// simplicial faces, constant-entry reduction, Bareiss ranks.
inline std::map<std::pair<int, Exponent>, std::size_t> taylor_minimal_betti(
    const std::vector<Exponent>& gens) {
    std::size_t r = gens.size();
    // face -> lcm label
    std::map<std::vector<int>, Exponent> label;
    for (int mask = 1; mask < (1 << r); ++mask) {
        std::vector<int> f;
        Exponent l(gens.empty() ? 0 : gens[0].size(), 0);
        for (std::size_t v = 0; v < r; ++v)
            if (mask & (1 << v)) {
                f.push_back(static_cast<int>(v));
                l = lcm_of(l, gens[v]);
            }
        label[f] = l;
    }
    std::set<Exponent> degrees;
    Exponent zero(gens.empty() ? 0 : gens[0].size(), 0);
    degrees.insert(zero);
    for (const auto& [f, l] : label) degrees.insert(l);

    std::map<std::pair<int, Exponent>, std::size_t> table;
    for (const Exponent& b : degrees) {
        // Homological degree i corresponds to faces of size i (degree 0 is
        // the empty face). Keep faces of label exactly b; entries survive
        // (are units) when facet label == face label.
        std::vector<std::vector<std::vector<int>>> basis(r + 1);
        basis[0] = {};
        if (zero == b) basis[0].push_back({});  // empty face at degree 0
        for (const auto& [f, l] : label)
            if (l == b) basis[f.size()].push_back(f);
        std::vector<std::size_t> dims(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
            std::sort(basis[i].begin(), basis[i].end());
            dims[i] = basis[i].size();
        }
        std::vector<std::size_t> ranks(r + 2, 0);
        for (std::size_t i = 1; i <= r; ++i) {
            if (dims[i] == 0 || dims[i - 1] == 0) continue;
            std::map<std::vector<int>, std::size_t> row;
            for (std::size_t k = 0; k < basis[i - 1].size(); ++k) row[basis[i - 1][k]] = k;
            std::vector<std::vector<long long>> m(dims[i - 1],
                                                  std::vector<long long>(dims[i], 0));
            for (std::size_t c = 0; c < basis[i].size(); ++c)
                for (std::size_t k = 0; k < basis[i][c].size(); ++k) {
                    std::vector<int> facet = basis[i][c];
                    facet.erase(facet.begin() + static_cast<long>(k));
                    auto it = row.find(facet);
                    if (it == row.end()) continue;  // facet label differs
                    m[it->second][c] = (k % 2 == 0) ? 1 : -1;
                }
            ranks[i] = bareiss_rank(std::move(m));
        }
        for (std::size_t i = 0; i <= r; ++i) {
            std::size_t h = dims[i] - ranks[i] - (i + 1 <= r ? ranks[i + 1] : 0);
            if (h != 0) table[{static_cast<int>(i), b}] = h;
        }
    }
    return table;
}

}  // namespace oracles
