#pragma once

#include "hyperlab/folang/builders.hpp"
#include "hyperlab/folang/evaluator.hpp"
#include "hyperlab/folang/formula.hpp"
#include "hyperlab/folang/sentences.hpp"
