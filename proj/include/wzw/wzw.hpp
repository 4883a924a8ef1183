#pragma once

// Modular data, fusion rules and simple-current analysis for SU(n) at level k.

#include "wzw/errors.hpp"
#include "wzw/fusion.hpp"
#include "wzw/modular_data.hpp"
#include "wzw/rational.hpp"
#include "wzw/simple_current.hpp"
#include "wzw/subfactor.hpp"
#include "wzw/weights.hpp"
#include "wzw/ymatrix.hpp"
