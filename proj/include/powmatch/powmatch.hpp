#pragma once

// Convenience header pulling in the whole library.

#include "powmatch/catalog.hpp"
#include "powmatch/constructive.hpp"
#include "powmatch/constructors.hpp"
#include "powmatch/element_set.hpp"
#include "powmatch/error.hpp"
#include "powmatch/export.hpp"
#include "powmatch/graph.hpp"
#include "powmatch/group.hpp"
#include "powmatch/group_io.hpp"
#include "powmatch/independence.hpp"
#include "powmatch/matching.hpp"
#include "powmatch/number_theory.hpp"
#include "powmatch/permutation.hpp"
#include "powmatch/theorem_lab.hpp"
