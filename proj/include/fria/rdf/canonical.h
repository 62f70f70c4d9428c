#pragma once

#include <map>

#include "fria/rdf/graph.h"

namespace fria::rdf {

// Deterministic blank node relabeling: every blank node gets a signature
// from its outgoing property tree, triples are sorted with signatures in
// place of labels, and labels b0, b1, ... are handed out in first-occurrence
// order of that sorted sequence. Exact for graphs whose blank nodes form
// shallow trees, which is all this project produces.
std::map<BlankNode, BlankNode> canonical_labels(const Graph& g);

// Copy of g (prefixes included) with canonical blank node labels.
Graph canonicalize(const Graph& g);

// Equality after canonical relabeling.
bool equal_modulo_blank_labels(const Graph& a, const Graph& b);

}  // namespace fria::rdf
