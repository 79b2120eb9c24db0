#ifndef RSAUX_STATS_HPP
#define RSAUX_STATS_HPP

#include "rsaux/stats/counting.hpp"
#include "rsaux/stats/distribution.hpp"
#include "rsaux/stats/fit.hpp"
#include "rsaux/stats/records.hpp"
#include "rsaux/stats/siegel.hpp"

#endif  // RSAUX_STATS_HPP
