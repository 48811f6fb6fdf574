#pragma once

#include "bounds.hpp"
#include "checks.hpp"
#include "decomposition.hpp"
#include "glk.hpp"
#include "io.hpp"
#include "stability.hpp"
