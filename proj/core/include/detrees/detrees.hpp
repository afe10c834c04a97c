#pragma once

// Umbrella header.

#include "detrees/checks.hpp"
#include "detrees/errors.hpp"
#include "detrees/hilbert.hpp"
#include "detrees/ideal.hpp"
#include "detrees/ladder.hpp"
#include "detrees/linalg.hpp"
#include "detrees/monomial.hpp"
#include "detrees/monomial_ideal.hpp"
#include "detrees/polynomial.hpp"
#include "detrees/relations.hpp"
#include "detrees/report.hpp"
#include "detrees/ring.hpp"
#include "detrees/shape.hpp"
#include "detrees/term_order.hpp"
#include "detrees/variable.hpp"
#include "detrees/weighting.hpp"
