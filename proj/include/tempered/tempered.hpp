#pragma once

#include "tempered/error.hpp"
#include "tempered/kernels.hpp"
#include "tempered/quadrature.hpp"
#include "tempered/polylog.hpp"
#include "tempered/singular.hpp"
#include "tempered/jet.hpp"
#include "tempered/modified.hpp"
#include "tempered/test_function.hpp"
#include "tempered/pairing.hpp"
#include "tempered/verify.hpp"
#include "tempered/golden.hpp"
