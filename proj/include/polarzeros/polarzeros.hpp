#ifndef POLARZEROS_POLARZEROS_HPP
#define POLARZEROS_POLARZEROS_HPP

#include "polarzeros/complex_poly.hpp"
#include "polarzeros/errors.hpp"
#include "polarzeros/localize.hpp"
#include "polarzeros/opuc.hpp"
#include "polarzeros/output.hpp"
#include "polarzeros/polar.hpp"
#include "polarzeros/reproduce.hpp"
#include "polarzeros/root_bounds.hpp"
#include "polarzeros/rootfind.hpp"
#include "polarzeros/serialize.hpp"

#endif
