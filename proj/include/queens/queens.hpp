#pragma once

// Umbrella header: the whole library in one include.

#include "queens/arrangement.hpp"
#include "queens/complete.hpp"
#include "queens/compose.hpp"
#include "queens/construct.hpp"
#include "queens/enumerate.hpp"
#include "queens/error.hpp"
#include "queens/io.hpp"
#include "queens/queen_function.hpp"
#include "queens/symmetry.hpp"
#include "queens/width.hpp"
