#pragma once

#include "sl2/algebra.hpp"
#include "sl2/errors.hpp"
#include "sl2/flow.hpp"
#include "sl2/linalg.hpp"
#include "sl2/orbit.hpp"
#include "sl2/ruling.hpp"
#include "sl2/symplectic.hpp"
