#pragma once

#include "hopfhilbert/errors.hpp"
#include "hopfhilbert/rational.hpp"
#include "hopfhilbert/polynomial.hpp"
#include "hopfhilbert/rational_function.hpp"
#include "hopfhilbert/matrix.hpp"
#include "hopfhilbert/linalg.hpp"
#include "hopfhilbert/hopf.hpp"
#include "hopfhilbert/group.hpp"
#include "hopfhilbert/hilbert.hpp"
#include "hopfhilbert/oracle.hpp"
#include "hopfhilbert/io.hpp"
