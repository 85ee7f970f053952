#pragma once

#include "superbd/rational.hpp"
#include "superbd/tensor.hpp"
#include "superbd/superalgebra.hpp"
#include "superbd/linear_operator.hpp"
#include "superbd/roots.hpp"
#include "superbd/triples.hpp"
#include "superbd/construct.hpp"
#include "superbd/verify.hpp"
#include "superbd/io.hpp"
