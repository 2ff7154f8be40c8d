#pragma once

#include "swcap/bounds.hpp"
#include "swcap/expected.hpp"
#include "swcap/experiment.hpp"
#include "swcap/format.hpp"
#include "swcap/generators.hpp"
#include "swcap/graph.hpp"
#include "swcap/json_io.hpp"
#include "swcap/mincut.hpp"
#include "swcap/normalizers.hpp"
#include "swcap/parallel.hpp"
#include "swcap/params.hpp"
#include "swcap/rng.hpp"
#include "swcap/routing.hpp"
