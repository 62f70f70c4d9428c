#pragma once

#include <random>

#include "fria/rdf/graph.h"

namespace fria::testing {

// A random graph of at most `max_triples` triples drawing on every
// literal kind. Blank nodes form trees (each referenced at most once), so
// they can be written as nested property lists.
rdf::Graph random_graph(std::mt19937& rng, int max_triples = 50);

}  // namespace fria::testing
