#pragma once

#include "bernoulli.hpp"
#include "bridge.hpp"
#include "check.hpp"
#include "context.hpp"
#include "convolutions.hpp"
#include "curious.hpp"
#include "error.hpp"
#include "exactnum.hpp"
#include "mhs.hpp"
#include "padic_roots.hpp"
#include "registry.hpp"
#include "report.hpp"
#include "search.hpp"
#include "stirling.hpp"
#include "sums.hpp"
#include "verifier.hpp"
