#pragma once

#include "fpcf/census.hpp"
#include "fpcf/errors.hpp"
#include "fpcf/extended_count.hpp"
#include "fpcf/fixtures.hpp"
#include "fpcf/inversion.hpp"
#include "fpcf/numtheory.hpp"
#include "fpcf/period.hpp"
#include "fpcf/permutation.hpp"
#include "fpcf/reconstruct.hpp"
