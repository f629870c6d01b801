#pragma once

// Fourier series toolkit: series analysis/synthesis on periodic sampling
// grids, chirp Z-transform, bandlimited zoom interpolation and circular
// convolution, in one and many dimensions.

#include "ffskit/bench.hpp"
#include "ffskit/convolve.hpp"
#include "ffskit/czt.hpp"
#include "ffskit/ffs.hpp"
#include "ffskit/funcs.hpp"
#include "ffskit/grid.hpp"
#include "ffskit/interp.hpp"
#include "ffskit/optics.hpp"
#include "ffskit/reference.hpp"
#include "ffskit/spectral.hpp"
#include "ffskit/tensor.hpp"
