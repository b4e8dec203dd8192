#pragma once

// Shared labeled-complex fixtures used by the unit tests and the
// acceptance suite.

#include "cellres/complex.hpp"
#include "cellres/morphism.hpp"
#include "cellres/resolution.hpp"

namespace fixtures {

using namespace cellres;

// Triangle with vertex labels ab, bc, cd (full 2-simplex).
inline std::vector<Exponent> abc_triangle_labels(const Ring& r) {
    return {r.parse_monomial("a*b"), r.parse_monomial("b*c"), r.parse_monomial("c*d")};
}

// Path with three vertices labeled ab, bc, cd and two edges; supports the
// minimal resolution of (ab, bc, cd).
inline LabeledComplex path_abc(const Ring& r) {
    LabeledComplex x(r);
    x.add_vertex("p0", r.parse_monomial("a*b"));
    x.add_vertex("p1", r.parse_monomial("b*c"));
    x.add_vertex("p2", r.parse_monomial("c*d"));
    x.add_cell({"q0", 1, {{"p0", -1}, {"p1", 1}}});
    x.add_cell({"q1", 1, {{"p1", -1}, {"p2", 1}}});
    return x;
}

// Path with three vertices labeled ab, b^2, cd (second tensor factor).
inline LabeledComplex path_ab2(const Ring& r) {
    LabeledComplex x(r);
    x.add_vertex("p0", r.parse_monomial("a*b"));
    x.add_vertex("p1", r.parse_monomial("b^2"));
    x.add_vertex("p2", r.parse_monomial("c*d"));
    x.add_cell({"q0", 1, {{"p0", -1}, {"p1", 1}}});
    x.add_cell({"q1", 1, {{"p1", -1}, {"p2", 1}}});
    return x;
}

// Hexagonal disk supporting the minimal resolution of (x,y,z)^2: six
// boundary vertices, two interior edges, two triangles and one square.
inline LabeledComplex square_of_maximal_ideal_complex(const Ring& r) {
    LabeledComplex x(r);
    auto mono = [&r](const char* s) { return r.parse_monomial(s); };
    x.add_vertex("x2", mono("x^2"));
    x.add_vertex("xy", mono("x*y"));
    x.add_vertex("y2", mono("y^2"));
    x.add_vertex("xz", mono("x*z"));
    x.add_vertex("yz", mono("y*z"));
    x.add_vertex("z2", mono("z^2"));
    auto edge = [&x](const char* id, const char* a, const char* b) {
        x.add_cell({id, 1, {{a, -1}, {b, 1}}});
    };
    edge("h1", "x2", "xy");
    edge("h2", "xy", "y2");
    edge("h3", "y2", "yz");
    edge("h4", "yz", "z2");
    edge("h5", "z2", "xz");
    edge("h6", "xz", "x2");
    edge("m1", "xy", "yz");
    edge("m2", "xy", "xz");
    x.add_cell({"T1", 2, {{"h1", 1}, {"m2", 1}, {"h6", 1}}});
    x.add_cell({"T2", 2, {{"h2", 1}, {"h3", 1}, {"m1", -1}}});
    x.add_cell({"R", 2, {{"m1", 1}, {"h4", 1}, {"h5", 1}, {"m2", -1}}});
    return x;
}

// The multiplication-by-z map from the triangle x,y,z into the rectangle
// side of the hexagonal disk.
inline CellularMap mult_by_z_map() {
    CellularMap g;
    g.carrier["c0"] = {"xz"};
    g.carrier["c1"] = {"yz"};
    g.carrier["c2"] = {"z2"};
    g.carrier["c0_1"] = {"m1", "m2"};
    g.carrier["c0_2"] = {"h5"};
    g.carrier["c1_2"] = {"h4"};
    g.carrier["c0_1_2"] = {"R"};
    return g;
}

// Koszul complex of (x,y) and the same interval with both labels xy.
inline LabeledComplex double_xy_interval(const Ring& r) {
    return simplex_complex(r, {r.parse_monomial("x*y"), r.parse_monomial("x*y")});
}

// Inclusion of the (ab,bc,cd)-path into the full triangle as a cellular map
// (vertices and edges are subcomplex cells of the simplex ids).
inline CellularMap path_into_triangle_map() {
    CellularMap g;
    g.carrier["p0"] = {"c0"};
    g.carrier["p1"] = {"c1"};
    g.carrier["p2"] = {"c2"};
    g.carrier["q0"] = {"c0_1"};
    g.carrier["q1"] = {"c1_2"};
    return g;
}

}  // namespace fixtures
