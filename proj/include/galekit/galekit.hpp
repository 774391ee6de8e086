#pragma once

#include "galekit/alternation.hpp"
#include "galekit/bounds.hpp"
#include "galekit/box_complex.hpp"
#include "galekit/coloring.hpp"
#include "galekit/families.hpp"
#include "galekit/gale.hpp"
#include "galekit/graph.hpp"
#include "galekit/homomorphism.hpp"
#include "galekit/hypergraph.hpp"
#include "galekit/io.hpp"
