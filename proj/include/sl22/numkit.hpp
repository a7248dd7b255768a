#pragma once

#include "sl22/numkit/complex.hpp"
#include "sl22/numkit/errors.hpp"
#include "sl22/numkit/linalg.hpp"
#include "sl22/numkit/newton.hpp"
#include "sl22/numkit/poly.hpp"
#include "sl22/numkit/random.hpp"
#include "sl22/numkit/real.hpp"
#include "sl22/numkit/residual.hpp"
#include "sl22/numkit/roots.hpp"
