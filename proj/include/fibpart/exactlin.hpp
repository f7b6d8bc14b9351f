#pragma once

#include "exactlin/annihilator.hpp"
#include "exactlin/charpoly.hpp"
#include "exactlin/eigen.hpp"
#include "exactlin/matrix.hpp"
#include "exactlin/polynomial.hpp"
#include "exactlin/roots.hpp"
#include "exactlin/sparse.hpp"
