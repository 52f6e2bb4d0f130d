#pragma once

#include "symmin/contraction.hpp"
#include "symmin/families.hpp"
#include "symmin/ground_set.hpp"
#include "symmin/instances.hpp"
#include "symmin/io.hpp"
#include "symmin/minimize.hpp"
#include "symmin/ordering.hpp"
#include "symmin/set_function.hpp"
#include "symmin/verify.hpp"
