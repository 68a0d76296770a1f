#pragma once

#include "oddtown/bit_subset.hpp"
#include "oddtown/constructions.hpp"
#include "oddtown/errors.hpp"
#include "oddtown/family_io.hpp"
#include "oddtown/gf2.hpp"
#include "oddtown/search.hpp"
#include "oddtown/set_family.hpp"
#include "oddtown/steiner.hpp"
#include "oddtown/verify.hpp"
