#pragma once

// Umbrella header for the homological shift ideals library.

#include "hsi/error.hpp"
#include "hsi/io.hpp"
#include "hsi/linalg.hpp"
#include "hsi/monomial.hpp"
#include "hsi/polarization.hpp"
#include "hsi/properties.hpp"
#include "hsi/resolution.hpp"
#include "hsi/shifts.hpp"
#include "hsi/simplicial.hpp"
