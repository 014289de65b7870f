#pragma once

#include "weightsys/canonical.hpp"
#include "weightsys/contraction.hpp"
#include "weightsys/diagram.hpp"
#include "weightsys/enumeration.hpp"
#include "weightsys/error.hpp"
#include "weightsys/generators.hpp"
#include "weightsys/io.hpp"
#include "weightsys/lie_algebra.hpp"
#include "weightsys/linalg.hpp"
#include "weightsys/oracle.hpp"
#include "weightsys/parallel.hpp"
#include "weightsys/permutation.hpp"
#include "weightsys/random.hpp"
#include "weightsys/relations.hpp"
#include "weightsys/scalar.hpp"
#include "weightsys/tensor.hpp"
#include "weightsys/weight_system.hpp"
