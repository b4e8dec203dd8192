#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cellres/qlinalg.hpp"
#include "cellres/ring.hpp"

namespace cellres {

struct GluingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One cell of a regular CW complex: signed facet list. Facets of dimension
// dim-1 only; repeated facet ids are accumulated when matrices are built.
struct Cell {
    std::string id;
    int dim = 0;
    std::vector<std::pair<std::string, int>> boundary;
};

struct ValidationReport {
    bool facet_dims_ok = true;
    bool d_squared_ok = true;
    bool diamond_ok = true;
    std::vector<std::string> messages;

    // Complexes failing these are rejected by all downstream constructors.
    bool cw_ok() const { return facet_dims_ok && d_squared_ok; }
    bool all_ok() const { return cw_ok() && diamond_ok; }
};

// Chain complex of finite-dimensional vector spaces over a fixed field.
// Degrees run min_degree, min_degree+1, ...; boundaries[i] maps degree
// (min_degree+i+1) to degree (min_degree+i).
struct FieldChainComplex {
    FieldSpec field;
    int min_degree = 0;
    std::vector<std::size_t> dims;
    std::vector<QMatrix> boundaries;

    bool boundaries_compose_to_zero() const;
    // Homology ranks, one per entry of dims.
    std::vector<std::size_t> homology_ranks() const;
};

// Regular CW complex with monomial labels on vertices. Face labels are the
// lcm of the vertex labels in the closure; collapsed complexes may override
// individual cells. Immutable by convention once built.
class LabeledComplex {
public:
    LabeledComplex() = default;
    explicit LabeledComplex(Ring ring) : ring_(std::move(ring)) {}

    const Ring& ring() const { return ring_; }
    bool empty() const { return cells_.empty(); }
    std::size_t cell_count() const { return cells_.size(); }
    int dim() const;  // -1 for the empty complex

    void add_cell(Cell cell);
    void add_vertex(const std::string& id, Exponent label);
    void set_vertex_label(const std::string& id, Exponent label);
    void set_label_override(const std::string& id, Exponent label);

    bool has_cell(const std::string& id) const { return cells_.count(id) > 0; }
    const Cell& cell(const std::string& id) const;
    const std::map<std::string, Cell>& cells() const { return cells_; }
    std::vector<std::string> cells_of_dim(int d) const;  // sorted by id
    const std::map<std::string, Exponent>& vertex_labels() const { return vertex_labels_; }
    const std::map<std::string, Exponent>& label_overrides() const { return label_overrides_; }

    // Closure of a cell, including itself (ids).
    std::set<std::string> closure(const std::string& id) const;
    // Monomial label of a face: override if present, else lcm over closure
    // vertices; the empty complex and degree-0 conventions give exponent 0.
    Exponent label(const std::string& id) const;

    // Connected components as sorted cell-id groups, ordered by least id.
    std::vector<std::vector<std::string>> components() const;
    int component_of(const std::string& id) const;

    ValidationReport validate_cw() const;

private:
    Ring ring_;
    std::map<std::string, Cell> cells_;
    std::map<std::string, Exponent> vertex_labels_;
    std::map<std::string, Exponent> label_overrides_;
};

// Full simplex on the given vertex labels; cells are sorted vertex subsets
// with the alternating-sign orientation from the sorted order.
LabeledComplex simplex_complex(const Ring& ring, const std::vector<Exponent>& vertex_labels);

// Full subcomplex on the cells whose label divides x^b (strictly, when
// strict is set).
LabeledComplex subcomplex_leq(const LabeledComplex& x, const Exponent& b, bool strict = false);

// Full subcomplex on a closed cell set (caller guarantees closedness).
LabeledComplex restrict_to_cells(const LabeledComplex& x, const std::set<std::string>& keep);

// Join: cells are pairs (s, t) with s in X or empty, t in Y or empty, not
// both empty; dim(s*t) = dim s + dim t + 1.
LabeledComplex join_complex(const LabeledComplex& x, const LabeledComplex& y);

// Disjoint union with namespaced ids ("A." / "B.").
LabeledComplex disjoint_union(const LabeledComplex& x, const LabeledComplex& y);

// Quotient of X ⊔ Y identifying cell x with cell identification[x]; the
// identification must be a dimension- and boundary-preserving bijection
// between subcomplexes, and identified vertices carry lcm labels.
LabeledComplex glue_complexes(const LabeledComplex& x, const LabeledComplex& y,
                              const std::map<std::string, std::string>& identification);

// Product CW complex with cells (s, t) and lcm labels on vertices.
LabeledComplex product_complex(const LabeledComplex& x, const LabeledComplex& y);

// Reduced chain complex over the field, degrees -1..dim.
FieldChainComplex reduced_chain_complex(const LabeledComplex& x, const FieldSpec& field);

// Reduced homology ranks in degrees -1..dim; the empty complex has rank 1
// in degree -1 (returned vector always has dim+2 entries, at least one).
std::vector<std::size_t> reduced_homology_ranks(const LabeledComplex& x, const FieldSpec& field);

// Every face label divides the labels of its cofaces (always true for
// derived labels; can fail for overrides).
bool labels_monotone(const LabeledComplex& x);

// Id helpers shared by the construction code.
std::string join_pair_id(const std::string& a, const std::string& b);
std::string product_pair_id(const std::string& a, const std::string& b);

}  // namespace cellres
