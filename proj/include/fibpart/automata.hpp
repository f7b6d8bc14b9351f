#pragma once

#include "automata/analysis.hpp"
#include "automata/claims.hpp"
#include "automata/construct.hpp"
#include "automata/dfa.hpp"
#include "automata/export.hpp"
#include "automata/matrices.hpp"
