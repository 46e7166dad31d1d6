#pragma once

#include "big_count.hpp"
#include "catalan.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "formulas.hpp"
#include "intersection.hpp"
#include "maps.hpp"
#include "partition.hpp"
#include "report.hpp"
