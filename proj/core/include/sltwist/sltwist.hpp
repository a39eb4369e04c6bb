#pragma once

#include "sltwist/catenoid.hpp"
#include "sltwist/closure.hpp"
#include "sltwist/curves.hpp"
#include "sltwist/errors.hpp"
#include "sltwist/export.hpp"
#include "sltwist/immersion.hpp"
#include "sltwist/necks.hpp"
#include "sltwist/ode.hpp"
#include "sltwist/periods.hpp"
#include "sltwist/symmetry.hpp"
#include "sltwist/torque.hpp"
#include "sltwist/twisted.hpp"
#include "sltwist/variation.hpp"
