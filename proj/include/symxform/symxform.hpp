#pragma once

#include "diffops.hpp"
#include "discrete_ft.hpp"
#include "errors.hpp"
#include "expfun.hpp"
#include "fourier_series.hpp"
#include "hermite.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "quad.hpp"
#include "symgroup.hpp"
