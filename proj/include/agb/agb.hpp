#pragma once

#include "agb/bounds.hpp"
#include "agb/error.hpp"
#include "agb/evalcode.hpp"
#include "agb/generic_bound.hpp"
#include "agb/gf.hpp"
#include "agb/hstar.hpp"
#include "agb/oracle.hpp"
#include "agb/semigroup.hpp"
#include "agb/verify.hpp"
