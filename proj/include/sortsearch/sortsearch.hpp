#pragma once

// umbrella header

#include "sortsearch/bench.hpp"
#include "sortsearch/binned.hpp"
#include "sortsearch/gap_stats.hpp"
#include "sortsearch/generate.hpp"
#include "sortsearch/instance.hpp"
#include "sortsearch/io.hpp"
#include "sortsearch/search.hpp"
