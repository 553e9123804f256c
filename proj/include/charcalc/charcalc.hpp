#ifndef CHARCALC_CHARCALC_HPP
#define CHARCALC_CHARCALC_HPP

#include <charcalc/category_o.hpp>
#include <charcalc/io.hpp>
#include <charcalc/laurent_poly.hpp>
#include <charcalc/oracles.hpp>
#include <charcalc/rational.hpp>
#include <charcalc/rational_char.hpp>
#include <charcalc/root_system.hpp>

#endif
