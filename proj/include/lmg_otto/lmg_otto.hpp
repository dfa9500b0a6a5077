#pragma once

#include "lmg_otto/crossing.hpp"
#include "lmg_otto/errors.hpp"
#include "lmg_otto/jacobi.hpp"
#include "lmg_otto/protocols.hpp"
#include "lmg_otto/spectrum.hpp"
#include "lmg_otto/sweep.hpp"
#include "lmg_otto/thermo.hpp"
