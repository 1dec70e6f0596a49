#pragma once

#include "sdlab/rational.hpp"
#include "sdlab/polynomial.hpp"
#include "sdlab/complex.hpp"
#include "sdlab/subdivision.hpp"
#include "sdlab/roots.hpp"
#include "sdlab/spectral.hpp"
#include "sdlab/theorems.hpp"
#include "sdlab/measures.hpp"
#include "sdlab/sampler.hpp"
#include "sdlab/io.hpp"
#include "sdlab/corpus.hpp"

namespace sdlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sdlab
