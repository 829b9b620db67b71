#pragma once

#include "hgq/compositions.hpp"
#include "hgq/error.hpp"
#include "hgq/families.hpp"
#include "hgq/hopf.hpp"
#include "hgq/hypergraph.hpp"
#include "hgq/linear_combination.hpp"
#include "hgq/parallel.hpp"
#include "hgq/polytope.hpp"
#include "hgq/qpoly.hpp"
#include "hgq/qsym.hpp"
#include "hgq/random.hpp"
#include "hgq/splitting.hpp"
#include "hgq/verify.hpp"
#include "hgq/vertex_set.hpp"
