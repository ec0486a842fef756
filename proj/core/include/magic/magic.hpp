#pragma once

#include "magic/analytics.hpp"
#include "magic/cover.hpp"
#include "magic/error.hpp"
#include "magic/graph.hpp"
#include "magic/init.hpp"
#include "magic/io.hpp"
#include "magic/membership.hpp"
#include "magic/metrics.hpp"
#include "magic/model.hpp"
#include "magic/optimize.hpp"
#include "magic/projection.hpp"
#include "magic/random.hpp"
#include "magic/sampler.hpp"
