#pragma once

#include "bounds.hpp"
#include "coeffs.hpp"
#include "csv.hpp"
#include "errors.hpp"
#include "figures.hpp"
#include "model.hpp"
#include "polyval.hpp"
#include "quadrature.hpp"
#include "ratio.hpp"
#include "specfun.hpp"
