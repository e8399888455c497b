#ifndef DNC_DNC_HPP
#define DNC_DNC_HPP

#include "dnc/errors.hpp"
#include "dnc/faces.hpp"
#include "dnc/generate.hpp"
#include "dnc/geometry.hpp"
#include "dnc/graph.hpp"
#include "dnc/halfedge.hpp"
#include "dnc/instance.hpp"
#include "dnc/io.hpp"
#include "dnc/noose.hpp"
#include "dnc/numeric.hpp"
#include "dnc/paths.hpp"
#include "dnc/prepare.hpp"
#include "dnc/separators.hpp"
#include "dnc/solver.hpp"
#include "dnc/triangulate.hpp"
#include "dnc/voronoi.hpp"

#endif
