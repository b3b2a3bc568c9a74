#pragma once

// Umbrella header: the full library.

#include "alphaspline/alpha.hpp"
#include "alphaspline/basis.hpp"
#include "alphaspline/catalog.hpp"
#include "alphaspline/checks.hpp"
#include "alphaspline/cli.hpp"
#include "alphaspline/curve.hpp"
#include "alphaspline/figures.hpp"
#include "alphaspline/io.hpp"
#include "alphaspline/knots.hpp"
#include "alphaspline/oracle.hpp"
#include "alphaspline/sampling.hpp"
