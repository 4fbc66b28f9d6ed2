#pragma once

#include "locturan/blocks.hpp"
#include "locturan/bounds.hpp"
#include "locturan/cliques.hpp"
#include "locturan/enumerate.hpp"
#include "locturan/error.hpp"
#include "locturan/extremal.hpp"
#include "locturan/generators.hpp"
#include "locturan/graph.hpp"
#include "locturan/io.hpp"
#include "locturan/oracle.hpp"
#include "locturan/parallel.hpp"
#include "locturan/rational.hpp"
#include "locturan/report.hpp"
#include "locturan/transforms.hpp"
#include "locturan/weights.hpp"
