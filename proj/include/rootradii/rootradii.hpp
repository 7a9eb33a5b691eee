#pragma once

#include "rootradii/annuli.hpp"
#include "rootradii/ball_polynomial.hpp"
#include "rootradii/complex_clustering.hpp"
#include "rootradii/generators.hpp"
#include "rootradii/int_polynomial.hpp"
#include "rootradii/io.hpp"
#include "rootradii/pellet.hpp"
#include "rootradii/real_isolation.hpp"
#include "rootradii/root_radii.hpp"
