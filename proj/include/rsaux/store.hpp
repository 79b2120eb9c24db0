#ifndef RSAUX_STORE_HPP
#define RSAUX_STORE_HPP

#include "rsaux/store/csv.hpp"
#include "rsaux/store/xray.hpp"
#include "rsaux/store/zeros_file.hpp"

#endif  // RSAUX_STORE_HPP
