// Umbrella header for the whole library.
#pragma once

#include "wpo/badseq.hpp"
#include "wpo/decomposition.hpp"
#include "wpo/enumerate.hpp"
#include "wpo/errors.hpp"
#include "wpo/linearize.hpp"
#include "wpo/lowerset.hpp"
#include "wpo/monomial.hpp"
#include "wpo/oracles.hpp"
#include "wpo/ordinal.hpp"
#include "wpo/ordinal_io.hpp"
#include "wpo/records.hpp"
#include "wpo/text.hpp"
