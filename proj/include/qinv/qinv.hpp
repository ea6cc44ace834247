#pragma once

// Umbrella header: exact quadratic-invariance toolkit over commutative rings.

#include "qinv/char_poly.hpp"
#include "qinv/controller_set.hpp"
#include "qinv/errors.hpp"
#include "qinv/expr.hpp"
#include "qinv/function_rings.hpp"
#include "qinv/linear_solve.hpp"
#include "qinv/matrix.hpp"
#include "qinv/monomial.hpp"
#include "qinv/multipoly_gcd.hpp"
#include "qinv/numeric.hpp"
#include "qinv/oracle.hpp"
#include "qinv/poly_ring.hpp"
#include "qinv/problem_io.hpp"
#include "qinv/qi_engine.hpp"
#include "qinv/rat_func.hpp"
#include "qinv/rings.hpp"
#include "qinv/sparse_poly.hpp"
#include "qinv/vandermonde.hpp"
