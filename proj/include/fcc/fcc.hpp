#pragma once

#include "fcc/error.hpp"
#include "fcc/ring.hpp"
#include "fcc/function.hpp"
#include "fcc/locality.hpp"
#include "fcc/bounds.hpp"
#include "fcc/search.hpp"
#include "fcc/encoders.hpp"
#include "fcc/verify.hpp"
#include "fcc/io.hpp"
