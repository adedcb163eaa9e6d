#pragma once

#include "tgcert/certify.hpp"
#include "tgcert/complex_matrix.hpp"
#include "tgcert/config.hpp"
#include "tgcert/eigenpairs.hpp"
#include "tgcert/hermitian_eigen.hpp"
#include "tgcert/io.hpp"
#include "tgcert/matrix_functions.hpp"
#include "tgcert/models.hpp"
#include "tgcert/numrange.hpp"
#include "tgcert/schur.hpp"
#include "tgcert/sweep.hpp"
