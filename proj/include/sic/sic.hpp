#pragma once

#include "sic/alphabet.hpp"
#include "sic/bench.hpp"
#include "sic/cost.hpp"
#include "sic/engine.hpp"
#include "sic/errors.hpp"
#include "sic/instance.hpp"
#include "sic/oracles.hpp"
#include "sic/problem.hpp"
#include "sic/script.hpp"
#include "sic/state_codec.hpp"
#include "sic/utf8.hpp"
