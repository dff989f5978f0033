#pragma once

#include "bohrlab/bohr.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/extractor.hpp"
#include "bohrlab/group.hpp"
#include "bohrlab/setlab.hpp"
#include "bohrlab/spectral.hpp"
#include "bohrlab/verify.hpp"
