#pragma once

#include "twodet/blowup.hpp"
#include "twodet/common.hpp"
#include "twodet/complexes.hpp"
#include "twodet/degenerations.hpp"
#include "twodet/groebner.hpp"
#include "twodet/hilbert.hpp"
#include "twodet/homology.hpp"
#include "twodet/invariants.hpp"
#include "twodet/io_json.hpp"
#include "twodet/kronecker.hpp"
#include "twodet/matrix.hpp"
#include "twodet/monomial.hpp"
#include "twodet/order.hpp"
#include "twodet/pencil.hpp"
#include "twodet/polynomial.hpp"
#include "twodet/primary.hpp"
#include "twodet/ring.hpp"
#include "twodet/scalar.hpp"
