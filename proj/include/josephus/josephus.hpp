#pragma once

#include "instance.hpp"
#include "maxnim.hpp"
#include "reference.hpp"
#include "survivor.hpp"
#include "verify.hpp"
#include "bench.hpp"
