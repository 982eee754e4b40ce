#pragma once

#include "polysurf/catalog.hpp"
#include "polysurf/complex.hpp"
#include "polysurf/cover.hpp"
#include "polysurf/curvature.hpp"
#include "polysurf/error.hpp"
#include "polysurf/gauss_bonnet.hpp"
#include "polysurf/generators.hpp"
#include "polysurf/isoperimetric.hpp"
#include "polysurf/metric.hpp"
#include "polysurf/psc.hpp"
#include "polysurf/rational.hpp"
#include "polysurf/render.hpp"
#include "polysurf/spherical.hpp"
#include "polysurf/vertex_type.hpp"
