#pragma once

#include "shortcycle/additive.hpp"
#include "shortcycle/cayley.hpp"
#include "shortcycle/cs_finder.hpp"
#include "shortcycle/dense.hpp"
#include "shortcycle/digraph.hpp"
#include "shortcycle/error.hpp"
#include "shortcycle/group_catalog.hpp"
#include "shortcycle/groups.hpp"
#include "shortcycle/io.hpp"
#include "shortcycle/kemperman.hpp"
#include "shortcycle/permutation.hpp"
#include "shortcycle/rng.hpp"
#include "shortcycle/transitive.hpp"
#include "shortcycle/verifier.hpp"
