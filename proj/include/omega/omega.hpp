#pragma once

#include "omega/antichain.hpp"
#include "omega/automata.hpp"
#include "omega/base.hpp"
#include "omega/bench.hpp"
#include "omega/breakpoint.hpp"
#include "omega/fixpoint.hpp"
#include "omega/formula.hpp"
#include "omega/inclusion.hpp"
#include "omega/io.hpp"
#include "omega/oracle.hpp"
#include "omega/random.hpp"
#include "omega/rank.hpp"
#include "omega/universal.hpp"
