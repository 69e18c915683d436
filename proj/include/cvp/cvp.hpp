#pragma once
// Umbrella header for the whole library.

#include "cvp/diversity.hpp"
#include "cvp/dimacs.hpp"
#include "cvp/graph.hpp"
#include "cvp/io.hpp"
#include "cvp/ksp.hpp"
#include "cvp/oracle.hpp"
#include "cvp/partition.hpp"
#include "cvp/ranking.hpp"
#include "cvp/spt.hpp"
#include "cvp/trellis.hpp"
