#pragma once

/// Umbrella header.

#include "homyd/check_report.hpp"
#include "homyd/errors.hpp"
#include "homyd/field.hpp"
#include "homyd/fixtures.hpp"
#include "homyd/hom_structures.hpp"
#include "homyd/linear_map.hpp"
#include "homyd/quasitriangular.hpp"
#include "homyd/representations.hpp"
#include "homyd/yetter_drinfeld.hpp"
