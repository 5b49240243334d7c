#pragma once

#include "tmsv/error.hpp"
#include "tmsv/fock.hpp"
#include "tmsv/fock_io.hpp"
#include "tmsv/format.hpp"
#include "tmsv/gaussian.hpp"
#include "tmsv/jacobi.hpp"
#include "tmsv/matrix.hpp"
#include "tmsv/measures.hpp"
#include "tmsv/spectral.hpp"
#include "tmsv/witness.hpp"
