#pragma once

#include "hyperlab/extlab/counters.hpp"
#include "hyperlab/extlab/cyclic.hpp"
#include "hyperlab/extlab/maximality.hpp"
#include "hyperlab/extlab/pairs.hpp"
