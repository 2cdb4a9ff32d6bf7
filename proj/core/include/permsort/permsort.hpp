#pragma once

#include "permsort/cost_matrix.hpp"
#include "permsort/cycle_decomposer.hpp"
#include "permsort/error.hpp"
#include "permsort/optimizer.hpp"
#include "permsort/oracle.hpp"
#include "permsort/permutation.hpp"
#include "permsort/permutation_decomposer.hpp"
