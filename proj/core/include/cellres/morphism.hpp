#pragma once

#include "cellres/resolution.hpp"
#include "cellres/solve.hpp"

namespace cellres {

// Combinatorial cellular map: each source cell carries a (possibly empty)
// set of target cells its image covers. The complexes live with the caller.
struct CellularMap {
    std::map<std::string, std::set<std::string>> carrier;

    const std::set<std::string>& carrier_of(const std::string& id) const;
    static CellularMap identity_on(const LabeledComplex& x);
};

struct CellularMapReport {
    bool ok = true;
    std::vector<std::string> messages;
};

// Vertices map to single vertices, carriers are skeletal (dimension does
// not increase) and closed (facet carriers lie in the closure of the
// cell's carrier).
CellularMapReport validate_cellular(const CellularMap& g, const LabeledComplex& x,
                                    const LabeledComplex& y);

// The label map of a cellular map: per source vertex, the lcm of the
// carrier labels; absent image encodes 0 (empty carrier).
struct LabelMap {
    std::map<std::string, std::optional<Exponent>> image;  // vertex id -> monomial or 0
};
LabelMap label_map(const CellularMap& g, const LabeledComplex& x, const LabeledComplex& y);

// Chain map as per-degree matrices f_i : F_i -> G_i. The degree-0 part may
// be absent, in which case the augmentation square is not checkable and is
// skipped by verification; all other missing degrees count as zero.
struct ChainMap {
    std::map<int, GradedMatrix> parts;

    bool has(int i) const { return parts.count(i) > 0; }
    GradedMatrix at_or_zero(int i, const CellularFreeComplex& f,
                            const CellularFreeComplex& g) const;
    static ChainMap identity_on(const CellularFreeComplex& f);
};

struct ChainMapReport {
    bool ok = true;
    // 1-based square index: square i relates f_i, f_{i-1} and d_i.
    int failing_square = 0;
    std::string message;
};

// Checks d^G_i f_i = f_{i-1} d^F_i for every i >= 1 (square 1 only when the
// degree-0 part is present); reports the first failing square.
ChainMapReport verify_chain_map(const ChainMap& f, const CellularFreeComplex& F,
                                const CellularFreeComplex& G);

enum class CompatibilityMode { SupportContainment, StrictSupport };

struct CompatibilityReport {
    bool ok = true;
    std::vector<std::string> messages;
};

// Compatibility of a chain map with a cellular map:
//  (a) the degree-0 part realizes the component-level carrier (zero column
//      exactly on components whose cells all have empty carriers),
//  (b) for every cell x, f(e_x) is supported on the same-dimension carrier
//      generators; empty carrier forces the zero column. Strict mode
//      requires the support to be exactly the same-dimension carrier set.
CompatibilityReport verify_compatible(const ChainMap& f, const CellularMap& g,
                                      const CellularFreeComplex& F, const CellularFreeComplex& G,
                                      CompatibilityMode mode = CompatibilityMode::SupportContainment);

// Compatible pair (chain map, cellular map) between linked complexes.
struct CellResMorphism {
    CellularFreeComplex source, target;
    ChainMap chain;
    CellularMap cell;
    bool verified = false;
};

// Builds and fully verifies a morphism from its raw pieces.
CellResMorphism make_morphism(const CellularFreeComplex& source, const CellularFreeComplex& target,
                              ChainMap chain, CellularMap cell,
                              CompatibilityMode mode = CompatibilityMode::SupportContainment);

struct SynthesisResult {
    std::optional<ChainMap> chain;
    // When absent: the first homological square with no admissible solution.
    int failed_square = 0;
};

// Degree-by-degree synthesis of the chain map compatible with g: the
// vertex part is the unit carrier indicator, higher parts are solved with
// support restricted to the carrier generators, and the degree-0 part is
// solved last from the augmentation square.
SynthesisResult chain_map_from_cellular(const CellularMap& g, const CellularFreeComplex& F,
                                        const CellularFreeComplex& G);

// Morphism built by synthesis; throws ResolutionError when no compatible
// chain map exists.
CellResMorphism morphism_from_cellular(const CellularMap& g, const CellularFreeComplex& F,
                                       const CellularFreeComplex& G);

CellResMorphism identity_morphism(const CellularFreeComplex& f);
CellResMorphism compose(const CellResMorphism& second, const CellResMorphism& first);

const ChainMap& forget_chain(const CellResMorphism& m);
const CellularMap& forget_cell(const CellResMorphism& m);

// Chain homotopy search: h_i : F_i -> G_{i+1} with
// f_i - g_i = d^G_{i+1} h_i + h_{i-1} d^F_i, all entries homogeneous with
// the given uniform degree shift.
std::optional<std::vector<GradedMatrix>> find_chain_homotopy(
    const ChainMap& f, const ChainMap& g, const CellularFreeComplex& F,
    const CellularFreeComplex& G, const Exponent& shift);

enum class Contiguity { Contiguous, NotContiguous, Unknown };

// Sufficient criteria only: carriers jointly inside the closure of one
// target cell imply homotopy; carriers split across components exclude it.
Contiguity contiguity_check(const CellularMap& g1, const CellularMap& g2,
                            const LabeledComplex& x, const LabeledComplex& y);

// Uniform multidegree shift of a chain map when one exists (all entries
// single terms with exponent deg(src) + s - deg(tgt) for one fixed s).
std::optional<Exponent> uniform_shift(const ChainMap& f, const CellularFreeComplex& F,
                                      const CellularFreeComplex& G);

}  // namespace cellres
