#pragma once

#include "monosens/asymptotics.hpp"
#include "monosens/big_rational.hpp"
#include "monosens/boolean_function.hpp"
#include "monosens/enumeration.hpp"
#include "monosens/exact_fraction.hpp"
#include "monosens/sampler.hpp"
#include "monosens/truth_table.hpp"
