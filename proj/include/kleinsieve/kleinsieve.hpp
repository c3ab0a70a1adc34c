#pragma once

#include "catalog.hpp"
#include "core/error.hpp"
#include "core/matrix.hpp"
#include "core/rational.hpp"
#include "data.hpp"
#include "eliminate.hpp"
#include "hyperbolic.hpp"
#include "lie_type.hpp"
#include "proper.hpp"
#include "realform.hpp"
#include "report.hpp"
#include "rootsys.hpp"
#include "sieve.hpp"
#include "subalg.hpp"
