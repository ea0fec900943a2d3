#ifndef BCIS_BCIS_HPP
#define BCIS_BCIS_HPP

#include "bcis/baselines.hpp"
#include "bcis/bench.hpp"
#include "bcis/core_sort.hpp"
#include "bcis/cost_models.hpp"
#include "bcis/csv.hpp"
#include "bcis/datagen.hpp"
#include "bcis/sort_stats.hpp"

#endif  // BCIS_BCIS_HPP
