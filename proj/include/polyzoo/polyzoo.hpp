#ifndef POLYZOO_POLYZOO_HPP
#define POLYZOO_POLYZOO_HPP

#include "polyzoo/canonical.hpp"
#include "polyzoo/charpoly.hpp"
#include "polyzoo/chromatic.hpp"
#include "polyzoo/core.hpp"
#include "polyzoo/distinguish.hpp"
#include "polyzoo/formula.hpp"
#include "polyzoo/graph.hpp"
#include "polyzoo/graph_io.hpp"
#include "polyzoo/harary.hpp"
#include "polyzoo/matching.hpp"
#include "polyzoo/matrix.hpp"
#include "polyzoo/mt_counting.hpp"
#include "polyzoo/permanent.hpp"
#include "polyzoo/poly.hpp"
#include "polyzoo/poly_format.hpp"
#include "polyzoo/tree_decomposition.hpp"
#include "polyzoo/tutte.hpp"

#endif  // POLYZOO_POLYZOO_HPP
