#pragma once

// Umbrella header: exact distribution, moments, and Monte Carlo estimation
// of the total-height statistic on rooted labeled trees.

#include "treeheight/enumerator.hpp"
#include "treeheight/format.hpp"
#include "treeheight/jet.hpp"
#include "treeheight/lagrange.hpp"
#include "treeheight/moments.hpp"
#include "treeheight/montecarlo.hpp"
#include "treeheight/oracle.hpp"
#include "treeheight/polynomial.hpp"
#include "treeheight/random.hpp"
#include "treeheight/rational.hpp"
#include "treeheight/series.hpp"
#include "treeheight/verify.hpp"
