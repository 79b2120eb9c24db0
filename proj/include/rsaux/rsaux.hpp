#ifndef RSAUX_RSAUX_HPP
#define RSAUX_RSAUX_HPP

#include "rsaux/numerics.hpp"
#include "rsaux/rfunc.hpp"
#include "rsaux/stats.hpp"
#include "rsaux/store.hpp"
#include "rsaux/zeros.hpp"

#endif  // RSAUX_RSAUX_HPP
