#pragma once

#include "beads/config.hpp"
#include "beads/error.hpp"
#include "beads/majorization.hpp"
#include "beads/oracle.hpp"
#include "beads/planner.hpp"
#include "beads/rational.hpp"
