#pragma once

#include "meyersig/bounds.hpp"
#include "meyersig/errors.hpp"
#include "meyersig/fibration.hpp"
#include "meyersig/linalg.hpp"
#include "meyersig/matrix.hpp"
#include "meyersig/meyer.hpp"
#include "meyersig/scl.hpp"
#include "meyersig/symplectic.hpp"
#include "meyersig/types.hpp"
#include "meyersig/wordlang.hpp"
