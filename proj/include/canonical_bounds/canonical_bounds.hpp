#pragma once

#include "blowup.hpp"
#include "curvedata.hpp"
#include "errors.hpp"
#include "exactmath.hpp"
#include "explorer.hpp"
#include "inequalities.hpp"
#include "vojta.hpp"
