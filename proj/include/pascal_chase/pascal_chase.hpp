#pragma once

#include "pascal_chase/exact.hpp"
#include "pascal_chase/triangle.hpp"
#include "pascal_chase/lang.hpp"
#include "pascal_chase/chase.hpp"
#include "pascal_chase/scripts.hpp"
#include "pascal_chase/harness.hpp"
#include "pascal_chase/render.hpp"
