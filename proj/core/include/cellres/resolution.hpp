#pragma once

#include <optional>
#include <set>

#include "cellres/complex.hpp"
#include "cellres/module.hpp"

namespace cellres {

struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Link between a free complex and the labeled complex carrying it.
// Generators in homological degree i >= 1 share ids with the (i-1)-cells;
// degree-0 generators map to connected components through component_of_gen.
struct CellLink {
    LabeledComplex complex;
    std::map<std::string, int> component_of_gen;
    // False when some boundary coefficient read off a differential was not
    // +-1; the algebraic side stays valid, the cell side is not regular.
    bool regular = true;
};

// Chain complex of multigraded free modules F_0 <- F_1 <- ... with exact
// polynomial differentials d_i : F_i -> F_{i-1}.
struct CellularFreeComplex {
    Ring ring;
    std::vector<GradedFreeModule> modules;
    std::vector<GradedMatrix> differentials;  // differentials[i] = d_{i+1}
    std::optional<CellLink> link;

    int top_degree() const { return static_cast<int>(modules.size()) - 1; }
    std::size_t rank(int i) const {
        return (i >= 0 && i <= top_degree()) ? modules[static_cast<std::size_t>(i)].rank() : 0;
    }
    std::vector<std::size_t> ranks() const;
    const GradedFreeModule& module(int i) const;
    // d_i : F_i -> F_{i-1}; zero matrix outside the stored range.
    GradedMatrix differential(int i) const;

    bool d_squared_is_zero() const;
    bool is_multigraded() const;  // every differential homogeneous of shift 0
    void validate() const;        // shape checks; throws on inconsistency
};

// The free complex of a labeled complex: one degree-0 generator per
// connected component (one for the empty complex), vertices in degree 1,
// faces of dimension i-1 in degree i. Rejects complexes failing the CW
// validation.
CellularFreeComplex cellular_free_complex(const LabeledComplex& x);

// Stock complexes.
CellularFreeComplex taylor_complex(const Ring& ring, const std::vector<Exponent>& generators);
CellularFreeComplex koszul_complex(const Ring& ring);  // Taylor on the variables
CellularFreeComplex initial_object(const Ring& ring);  // 0 <- S <- 0 on the empty complex

// Degree-b strand over the field: basis in homological degree i is the
// generators of F_i whose degree divides x^b; entries are the scalar
// coefficients of the forced monomials.
FieldChainComplex strand(const CellularFreeComplex& f, const Exponent& b, const FieldSpec& field);

// Join-closure of a degree set (adds the zero degree).
std::set<Exponent> lcm_closure(const std::vector<Exponent>& degrees, std::size_t nvars);

struct AcyclicityReport {
    bool acyclic = true;
    std::optional<Exponent> witness_degree;
    int witness_homological_degree = -1;
};

// Algebraic acyclicity: every strand over the lcm-closure of generator
// degrees is exact in homological degrees >= 1.
AcyclicityReport is_acyclic_complex(const CellularFreeComplex& f, const FieldSpec& field);

// Combinatorial criterion: for every b in the lcm-closure of the vertex
// labels, each connected component's subcomplex of labels dividing x^b has
// vanishing reduced homology (empty subcomplexes allowed).
AcyclicityReport is_resolution_combinatorial(const LabeledComplex& x, const FieldSpec& field);

// Per component, the vertex labels of the linked complex (the generators of
// the resolved ideal). The initial object resolves the unit ideal. Throws
// ResolutionError when the complex is not a linked resolution.
std::vector<std::vector<Exponent>> resolved_module(const CellularFreeComplex& f,
                                                   const FieldSpec& field = FieldSpec::rationals());

using BettiTable = std::map<std::pair<int, Exponent>, std::size_t>;

// Generator counts per (homological degree, multidegree).
BettiTable betti(const CellularFreeComplex& f);
// No differential entry has a nonzero constant term.
bool is_minimal(const CellularFreeComplex& f);
// Minimal Betti numbers of the resolved module, read off any resolution by
// killing all positive-degree entries and taking strand homology.
BettiTable minimal_betti(const CellularFreeComplex& f, const FieldSpec& field);

// Isomorphism search up to generator permutation and per-generator sign
// flips (degree-preserving). Returns per-degree permutations mapping f's
// generator indices to g's, with signs, when one exists.
struct SignedPermutation {
    std::vector<std::size_t> perm;  // f index -> g index
    std::vector<int> sign;          // per f index
};
std::optional<std::vector<SignedPermutation>> iso_up_to_signed_permutation(
    const CellularFreeComplex& f, const CellularFreeComplex& g);

// Rebuild the labeled complex underlying a free complex whose differentials
// are homogeneous single terms: degree-1 generators become vertices, the
// boundary of each higher cell is read from the matrix coefficients. Labels
// that disagree with the closure lcm become overrides.
CellLink complex_from_free_complex(const CellularFreeComplex& f);

}  // namespace cellres
