#pragma once

#include "flatkit/density.hpp"
#include "flatkit/eval.hpp"
#include "flatkit/formula.hpp"
#include "flatkit/generators.hpp"
#include "flatkit/graph.hpp"
#include "flatkit/interpretation.hpp"
#include "flatkit/io.hpp"
#include "flatkit/minors.hpp"
#include "flatkit/structure.hpp"
#include "flatkit/witness.hpp"
