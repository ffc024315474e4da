#pragma once

#include "fls/classify.hpp"
#include "fls/closure.hpp"
#include "fls/counting.hpp"
#include "fls/enumerate.hpp"
#include "fls/errors.hpp"
#include "fls/io.hpp"
#include "fls/lattice.hpp"
#include "fls/point_set.hpp"
#include "fls/space.hpp"
#include "fls/theorems.hpp"
