#pragma once

// Umbrella header: exact second-order Eulerian combinatorics — number
// families, Norlund polynomials, and the identity verification suite.

#include "euler2/eulerian.hpp"
#include "euler2/formats.hpp"
#include "euler2/identities.hpp"
#include "euler2/norlund.hpp"
#include "euler2/polynomial.hpp"
#include "euler2/rational.hpp"
#include "euler2/series.hpp"
#include "euler2/special_numbers.hpp"
