#pragma once

// Umbrella header.

#include "qsv/errors.hpp"
#include "qsv/gaussian_rational.hpp"
#include "qsv/linalg.hpp"
#include "qsv/subspace.hpp"
#include "qsv/projector.hpp"
#include "qsv/proposition.hpp"
#include "qsv/epr.hpp"
#include "qsv/fixtures.hpp"
#include "qsv/report_io.hpp"
