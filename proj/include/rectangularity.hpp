#pragma once

#include "rectangularity/bool_matrix.hpp"
#include "rectangularity/construct.hpp"
#include "rectangularity/conversions.hpp"
#include "rectangularity/core.hpp"
#include "rectangularity/enumerate.hpp"
#include "rectangularity/error.hpp"
#include "rectangularity/fixtures.hpp"
#include "rectangularity/io.hpp"
#include "rectangularity/isotopy.hpp"
#include "rectangularity/properties.hpp"
#include "rectangularity/transform.hpp"
