#pragma once

#include "tricolor/errors.hpp"
#include "tricolor/exact.hpp"
#include "tricolor/graph.hpp"
#include "tricolor/combinatorics.hpp"
#include "tricolor/characterize.hpp"
#include "tricolor/generators.hpp"
#include "tricolor/sweep.hpp"
#include "tricolor/report.hpp"
