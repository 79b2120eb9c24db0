#ifndef RSAUX_NUMERICS_HPP
#define RSAUX_NUMERICS_HPP

#include "rsaux/numerics/bernoulli.hpp"
#include "rsaux/numerics/complex.hpp"
#include "rsaux/numerics/gamma.hpp"
#include "rsaux/numerics/parallel.hpp"
#include "rsaux/numerics/precision.hpp"
#include "rsaux/numerics/zeta.hpp"

#endif  // RSAUX_NUMERICS_HPP
