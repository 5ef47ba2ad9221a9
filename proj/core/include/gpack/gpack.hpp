#pragma once

#include "gpack/error.hpp"
#include "gpack/exact.hpp"
#include "gpack/frames.hpp"
#include "gpack/heisenberg.hpp"
#include "gpack/idempotents.hpp"
#include "gpack/json_io.hpp"
#include "gpack/permgroup.hpp"
#include "gpack/permutation.hpp"
#include "gpack/scheme.hpp"
#include "gpack/symmetry.hpp"
