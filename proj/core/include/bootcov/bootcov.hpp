#pragma once

#include "bootcov/binom_one.hpp"
#include "bootcov/binom_two.hpp"
#include "bootcov/curve_tools.hpp"
#include "bootcov/discrete_dist.hpp"
#include "bootcov/error.hpp"
#include "bootcov/eval.hpp"
#include "bootcov/interval_table.hpp"
#include "bootcov/mc.hpp"
#include "bootcov/nonparam.hpp"
#include "bootcov/normal_param.hpp"
#include "bootcov/percentile.hpp"
#include "bootcov/plan.hpp"
#include "bootcov/quadrature.hpp"
#include "bootcov/rational.hpp"
#include "bootcov/rng.hpp"
#include "bootcov/stats.hpp"
#include "bootcov/validation.hpp"
#include "bootcov/version.hpp"
