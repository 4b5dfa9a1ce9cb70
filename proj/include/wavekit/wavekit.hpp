#pragma once

#include "wavekit/builtin.hpp"
#include "wavekit/cli.hpp"
#include "wavekit/emit.hpp"
#include "wavekit/error.hpp"
#include "wavekit/groebner.hpp"
#include "wavekit/ideal_ops.hpp"
#include "wavekit/linalg.hpp"
#include "wavekit/module.hpp"
#include "wavekit/monomial.hpp"
#include "wavekit/operator.hpp"
#include "wavekit/order.hpp"
#include "wavekit/parse.hpp"
#include "wavekit/plucker.hpp"
#include "wavekit/polymatrix.hpp"
#include "wavekit/polynomial.hpp"
#include "wavekit/rational.hpp"
#include "wavekit/ring.hpp"
#include "wavekit/syzygy.hpp"
#include "wavekit/varieties.hpp"
