#pragma once

#include "fibpart/automata.hpp"
#include "fibpart/exactlin.hpp"
#include "fibpart/gsr.hpp"
#include "fibpart/numeration.hpp"
#include "fibpart/powersums.hpp"
#include "fibpart/serialize.hpp"
#include "fibpart/spectral.hpp"
