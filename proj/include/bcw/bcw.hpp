#pragma once

#include "bcw/analysis.hpp"
#include "bcw/batch.hpp"
#include "bcw/bench.hpp"
#include "bcw/engine.hpp"
#include "bcw/error.hpp"
#include "bcw/int_poly.hpp"
#include "bcw/io.hpp"
#include "bcw/oracles.hpp"
#include "bcw/primality.hpp"
#include "bcw/verify.hpp"
#include "bcw/word.hpp"
