#pragma once

#include "affprox/approx.hpp"
#include "affprox/envelope.hpp"
#include "affprox/errors.hpp"
#include "affprox/generate.hpp"
#include "affprox/geometry.hpp"
#include "affprox/instance.hpp"
#include "affprox/lp.hpp"
#include "affprox/oracle.hpp"
#include "affprox/prng.hpp"
#include "affprox/rational.hpp"
