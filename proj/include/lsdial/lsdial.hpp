#pragma once

// Convenience header pulling in the whole library: exact rational linear
// algebra, two-product algebras with axiom checkers, weighted derivation
// spaces, derivation Lie structure, the two-dimensional class catalog, and
// the table/sweep reporting layer.

#include "lsdial/algebra.hpp"
#include "lsdial/algebra_json.hpp"
#include "lsdial/catalog.hpp"
#include "lsdial/derivation.hpp"
#include "lsdial/errors.hpp"
#include "lsdial/lie.hpp"
#include "lsdial/matrix.hpp"
#include "lsdial/rational.hpp"
#include "lsdial/report.hpp"
#include "lsdial/weights.hpp"
