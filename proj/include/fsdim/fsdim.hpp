#pragma once

// Umbrella header: entropy/divergence measures, seeded sequence generation,
// Borel-normality censuses, block-coder compressors, and the finite-state
// dimension estimators.

#include "fsdim/alphabet.hpp"
#include "fsdim/bits.hpp"
#include "fsdim/block_coder.hpp"
#include "fsdim/census.hpp"
#include "fsdim/dimest.hpp"
#include "fsdim/format.hpp"
#include "fsdim/fsc.hpp"
#include "fsdim/generate.hpp"
#include "fsdim/io.hpp"
#include "fsdim/measure.hpp"
#include "fsdim/prefix_code.hpp"
#include "fsdim/prng.hpp"
#include "fsdim/rational.hpp"
#include "fsdim/sequence.hpp"
