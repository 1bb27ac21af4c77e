#pragma once

#include "witt/arrow.hpp"
#include "witt/error.hpp"
#include "witt/perfect.hpp"
#include "witt/ext_norm.hpp"
#include "witt/ring.hpp"
#include "witt/rings/cyclotomic.hpp"
#include "witt/rings/gaussian.hpp"
#include "witt/rings/integers.hpp"
#include "witt/rings/mod_pm.hpp"
#include "witt/rings/perf_poly.hpp"
#include "witt/tilt.hpp"
#include "witt/kernelnorm.hpp"
#include "witt/artin.hpp"
#include "witt/rigidity.hpp"
#include "witt/universal.hpp"
#include "witt/witt_vector.hpp"
