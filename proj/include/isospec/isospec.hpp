#pragma once

#include "isospec/types.hpp"
#include "isospec/numerics.hpp"
#include "isospec/frames.hpp"
#include "isospec/intertwining.hpp"
#include "isospec/gframes.hpp"
#include "isospec/catalog.hpp"
#include "isospec/serialize.hpp"
#include "isospec/report.hpp"
