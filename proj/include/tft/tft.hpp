#pragma once

// Umbrella header for the whole library.

#include "tft/bench.hpp"
#include "tft/bits.hpp"
#include "tft/bridge.hpp"
#include "tft/cyclotomic.hpp"
#include "tft/error.hpp"
#include "tft/fft.hpp"
#include "tft/field.hpp"
#include "tft/multiply.hpp"
#include "tft/oracle.hpp"
#include "tft/plan.hpp"
#include "tft/polyfile.hpp"
#include "tft/polynomial.hpp"
#include "tft/selftest.hpp"
