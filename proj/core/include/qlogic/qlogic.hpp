#pragma once

#include "qlogic/errors.hpp"
#include "qlogic/formula.hpp"
#include "qlogic/hfset.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/linalg.hpp"
#include "qlogic/matrix.hpp"
#include "qlogic/measurement.hpp"
#include "qlogic/projection.hpp"
#include "qlogic/random.hpp"
#include "qlogic/reals.hpp"
#include "qlogic/transfer.hpp"
#include "qlogic/universe.hpp"
