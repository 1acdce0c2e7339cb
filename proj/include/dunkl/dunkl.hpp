#pragma once

#include "poly.hpp"
#include "dunkl_ops.hpp"
#include "jack.hpp"
#include "special.hpp"
#include "hyp.hpp"
#include "quad.hpp"
#include "transforms.hpp"
#include "verify.hpp"
