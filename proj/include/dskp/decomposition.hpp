#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dskp/graph.hpp"

namespace dskp {

// Tree of bags over a graph's vertices. Bags are sorted vertex lists; the
// tree is given as adjacency over bag indices.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;

    // Checks the three decomposition properties against g, each reported
    // distinctly, plus that the bag graph is a tree.
    void validate(const Graph& g) const;
};

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    std::vector<int> bag;  // sorted
    int child = -1;        // first child (all kinds except Leaf)
    int child2 = -1;       // second child (Join only)
    int vertex = -1;       // introduced/forgotten vertex
};

// Rooted binary decomposition with leaf/introduce/forget/join nodes. Root and
// leaves carry empty bags.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
    std::vector<int> post_order() const;

    // Nice-form structural invariants plus the underlying decomposition
    // properties against g.
    void validate(const Graph& g) const;
};

// PACE-2017 `.td` format (1-based vertex and bag ids on the wire).
TreeDecomposition parse_td(std::istream& in);
TreeDecomposition parse_td(const std::string& text);
std::string write_td(const TreeDecomposition& td, int n_vertices);

// Min-degree elimination ordering. Valid for every graph; width is an upper
// bound on the treewidth, with no optimality claim.
TreeDecomposition heuristic_td(const Graph& g);

// Kloks-style transformation: same width, every original bag appears, root
// and leaves normalized to empty bags. Between adjacent bags forgets are
// emitted before introduces so intermediate bags never grow past the width.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

}  // namespace dskp
