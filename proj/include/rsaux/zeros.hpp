#ifndef RSAUX_ZEROS_HPP
#define RSAUX_ZEROS_HPP

#include "rsaux/zeros/compute.hpp"
#include "rsaux/zeros/newton.hpp"
#include "rsaux/zeros/seeds.hpp"
#include "rsaux/zeros/tracking.hpp"
#include "rsaux/zeros/types.hpp"
#include "rsaux/zeros/verify.hpp"

#endif  // RSAUX_ZEROS_HPP
