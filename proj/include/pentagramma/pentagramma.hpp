#pragma once

#include "pentagramma/cone_spectrum.hpp"
#include "pentagramma/dilogarithm.hpp"
#include "pentagramma/elliptic.hpp"
#include "pentagramma/errors.hpp"
#include "pentagramma/gauss_projection.hpp"
#include "pentagramma/geometry.hpp"
#include "pentagramma/pentagram.hpp"
#include "pentagramma/poncelet.hpp"
#include "pentagramma/uniformization.hpp"
