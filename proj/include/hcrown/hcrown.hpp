#pragma once

#include "types.hpp"
#include "clifford.hpp"
#include "htype.hpp"
#include "solvable.hpp"
#include "complexify.hpp"
#include "crown.hpp"
#include "rank_one.hpp"
#include "adjoint.hpp"
#include "sphere_min.hpp"
#include "ellipticity.hpp"
#include "geodesic.hpp"
#include "eigenfunctions.hpp"
#include "probe.hpp"
#include "mesh_io.hpp"
#include "verify.hpp"
