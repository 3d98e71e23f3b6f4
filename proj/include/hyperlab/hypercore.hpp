#pragma once

#include "hyperlab/hypercore/density.hpp"
#include "hyperlab/hypercore/distance.hpp"
#include "hyperlab/hypercore/errors.hpp"
#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/isomorphism.hpp"
#include "hyperlab/hypercore/limits.hpp"
#include "hyperlab/hypercore/rational.hpp"
#include "hyperlab/hypercore/rooted_pair.hpp"
#include "hyperlab/hypercore/shg.hpp"
