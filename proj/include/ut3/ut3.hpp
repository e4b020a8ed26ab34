#pragma once

#include "ut3/group.hpp"
#include "ut3/cyclotomic.hpp"
#include "ut3/irreps.hpp"
#include "ut3/linalg.hpp"
#include "ut3/random.hpp"
#include "ut3/decomposition.hpp"
#include "ut3/feature_map.hpp"
#include "ut3/filters.hpp"
#include "ut3/chain.hpp"
#include "ut3/json_io.hpp"
