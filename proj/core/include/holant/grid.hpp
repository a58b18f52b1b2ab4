#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "holant/signature.hpp"

namespace holant {

struct Port {
    int vertex = 0;
    int port = 0;
    bool operator==(const Port& o) const { return vertex == o.vertex && port == o.port; }
};

/// A signature grid: vertices carrying signatures, edges joining ports,
/// and an ordered list of dangling ports (the output variables of a
/// gadget).  Every port must be covered exactly once by an edge endpoint
/// or a dangling entry; an edge may join two distinct ports of one vertex
/// (a self-loop).
struct SignatureGrid {
    std::vector<Signature> vertices;
    std::vector<std::pair<Port, Port>> edges;
    std::vector<Port> dangling;

    int add_vertex(Signature f) {
        vertices.push_back(std::move(f));
        return static_cast<int>(vertices.size()) - 1;
    }
    void connect(int va, int pa, int vb, int pb) {
        edges.push_back({Port{va, pa}, Port{vb, pb}});
    }
    void dangle(int v, int p) { dangling.push_back(Port{v, p}); }
};

/// Checks the port-coverage invariant and index bounds; throws
/// MalformedGrid naming the offending port.
void validate_grid(const SignatureGrid& g);

/// Variable ids per port: one shared id per edge (numbered in edge-list
/// order), then one per dangling port.
struct GridWiring {
    std::vector<std::vector<int>> port_var;
    int num_edge_vars = 0;
    int num_dangling = 0;
};
GridWiring grid_wiring(const SignatureGrid& g);

inline constexpr int kDefaultBruteCap = 24;

/// The exact Holant value of a closed grid, by depth-first assignment of
/// whole vertex supports (sparsest vertices first) with zero pruning.
/// Throws TooLarge above the edge cap and MalformedGrid for invalid or
/// non-closed grids.
Cyc8 holant_brute(const SignatureGrid& g, int max_edges = kDefaultBruteCap);

/// Contracts a grid with dangling ports into the derived signature whose
/// value at each dangling assignment is the Holant of the pinned grid.
Signature compose_gadget(const SignatureGrid& g, int max_edges = kDefaultBruteCap);

}  // namespace holant
