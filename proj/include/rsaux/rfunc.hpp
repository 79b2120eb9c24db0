#ifndef RSAUX_RFUNC_HPP
#define RSAUX_RFUNC_HPP

#include "rsaux/rfunc/pfunc.hpp"
#include "rsaux/rfunc/quadrature.hpp"
#include "rsaux/rfunc/rfunc.hpp"

#endif  // RSAUX_RFUNC_HPP
