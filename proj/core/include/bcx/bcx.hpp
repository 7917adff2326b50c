#pragma once

#include "bcx/bicomplex.hpp"
#include "bcx/cyclic.hpp"
#include "bcx/errors.hpp"
#include "bcx/function_space.hpp"
#include "bcx/hermitian_eig.hpp"
#include "bcx/hilbert.hpp"
#include "bcx/operator.hpp"
#include "bcx/serialize.hpp"
#include "bcx/spectral.hpp"
#include "bcx/spectral_measure.hpp"
