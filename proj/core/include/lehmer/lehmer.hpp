#pragma once

#include "lehmer/cyclo.hpp"
#include "lehmer/error.hpp"
#include "lehmer/factor_cache.hpp"
#include "lehmer/factorint.hpp"
#include "lehmer/ppd.hpp"
#include "lehmer/quadring.hpp"
#include "lehmer/real.hpp"
#include "lehmer/search.hpp"
#include "lehmer/seqkit.hpp"
#include "lehmer/serialize.hpp"
#include "lehmer/verify.hpp"
