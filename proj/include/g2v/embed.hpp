#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2v/rational.hpp"
#include "g2v/singular.hpp"
#include "g2v/verma.hpp"

#include "json.hpp"

namespace g2v {

// Directed embedding between module indices; type records which
// singular-vector family realizes the embedding together with its
// parameters.
struct Edge {
    int src = 0;
    int dst = 0;
    SvType type;

    auto operator<=>(const Edge&) const = default;
};

// Embedding diagram of a lowest-weight module: nodes are the lowest
// weights of the submodules reachable from the root, edges are the
// singular-vector embeddings between them.  nodes[0] is the root.
// Canonical form: nodes sorted by ascending weight sum, then
// lexicographically; edges sorted by (src, dst, type).
struct EmbeddingDiagram {
    std::vector<Weight> nodes;
    std::vector<Edge> edges;

    bool operator==(const EmbeddingDiagram&) const = default;
};

// Thrown by build_diagram when the closure is still growing after the
// requested number of layers.
struct DepthExhausted : std::runtime_error {
    explicit DepthExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Computes the reducibility closure from lw by breadth-first search:
// classify each frontier weight, add an edge and node for every finding,
// merge nodes with equal weights, and stop once every node has been
// classified.  Throws std::invalid_argument if max_depth < 1 and
// DepthExhausted if unclassified weights remain after max_depth layers.
EmbeddingDiagram build_diagram(const Weight& lw, int max_depth = 16);

// Reference diagram for a named reducibility case, assembled from the
// case's closed-form node table and then normalized: nodes with equal
// weights are merged, edges whose derived parameters are not positive
// integers (or hit the degenerate exclusions of type iii) are dropped,
// duplicate edges are removed, and nodes left unreachable from the root
// are pruned.  Every normalization step appends one line to *notes when
// notes is non-null.
//
// Case ids and required parameters:
//   "A234", "A2345", "A12345"  -> p3, q3   (p3<q3 / q3<p3<2q3 / 2q3<p3)
//   "A245", "A24"              -> p2
//   "A145-1", "A145-2"         -> p4, p5   (p4<p5 / p4=p5)
//   "A14-1", "A14-2"           -> p1, q    (p1<=q / q<p1<=2q)
//   "A15"                      -> p1, p5   (2p5<=p1)
//   "A1-2", "A1-3", "A1-4"     -> p1, Lambda1
//   "A2-2", "A2-3", "A2-4"     -> p2, Lambda1
//   "A4"                       -> p4, Lambda1
//   "A5"                       -> p5, Lambda2
// Throws std::invalid_argument for an unknown id or missing/non-integral
// integer parameters, std::domain_error when the parameters violate the
// case's regime (wrong ordering, wrong sub-case window, or a continuous
// parameter on a reducibility line of a different case).
EmbeddingDiagram catalog_diagram(const std::string& case_id,
                                 const std::map<std::string, Rational>& params,
                                 std::vector<std::string>* notes = nullptr);

// One named catalog case together with concrete parameter values.
struct CatalogInstance {
    std::string case_id;
    std::map<std::string, Rational> params;
};

// Fixed list of catalog instances covering every case id and, for the
// cases with several regime branches, every branch.
std::vector<CatalogInstance> catalog_instances();

// Short display form, e.g. "A234(p3=1,q3=2)".
std::string catalog_label(const CatalogInstance& inst);

// Graphviz source: node ids n0, n1, ... labelled with weights, edges
// labelled with type and parameters, e.g. iii(p3=5,q3=2).
std::string to_dot(const EmbeddingDiagram& d);

nlohmann::json to_json(const EmbeddingDiagram& d);
EmbeddingDiagram diagram_from_json(const nlohmann::json& j);

// Lists node-by-node and edge-by-edge differences between two diagrams
// (edges compared by endpoint weights, not indices).  Empty means equal.
std::vector<std::string> diagram_diff(const EmbeddingDiagram& a,
                                      const EmbeddingDiagram& b);

}  // namespace g2v
