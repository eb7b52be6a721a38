#pragma once

#include "qhall/opalg/diff_op.hpp"
#include "qhall/opalg/gaussian_rational.hpp"
#include "qhall/opalg/laurent_poly.hpp"
#include "qhall/opalg/phase_poly.hpp"
#include "qhall/opalg/rational_func.hpp"
#include "qhall/opalg/symbols.hpp"
