#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"
#include "monutil/func/bump_family.hpp"
#include "monutil/func/envelope.hpp"
#include "monutil/func/sequence.hpp"
#include "monutil/lp/acceptance_cone.hpp"
#include "monutil/lp/double_description.hpp"
#include "monutil/lp/polar.hpp"
#include "monutil/lp/simplex.hpp"
#include "monutil/measure/measure.hpp"
#include "monutil/space/compactification.hpp"
#include "monutil/space/metric_space.hpp"
#include "monutil/space/path_space.hpp"
#include "monutil/utility/harness.hpp"
#include "monutil/utility/penalty.hpp"
#include "monutil/utility/scenario_set.hpp"
#include "monutil/utility/utility.hpp"
