#ifndef POLYSPEC_POLYSPEC_HPP
#define POLYSPEC_POLYSPEC_HPP

// Umbrella header: the whole library.

#include "polyspec/check.hpp"
#include "polyspec/ehrhart.hpp"
#include "polyspec/errors.hpp"
#include "polyspec/half_open.hpp"
#include "polyspec/hodge_ehrhart.hpp"
#include "polyspec/json_io.hpp"
#include "polyspec/lattice_polytope.hpp"
#include "polyspec/linalg.hpp"
#include "polyspec/numeric.hpp"
#include "polyspec/polytope_spectrum.hpp"
#include "polyspec/qpolynomial.hpp"
#include "polyspec/random_polytopes.hpp"
#include "polyspec/report.hpp"
#include "polyspec/roots.hpp"
#include "polyspec/series.hpp"
#include "polyspec/spectrum.hpp"
#include "polyspec/theta_family.hpp"
#include "polyspec/thom_sebastiani.hpp"

#endif  // POLYSPEC_POLYSPEC_HPP
