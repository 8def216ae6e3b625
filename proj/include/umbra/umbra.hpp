#ifndef UMBRA_UMBRA_HPP
#define UMBRA_UMBRA_HPP

#include "umbra/anger_weber.hpp"
#include "umbra/asymptotic.hpp"
#include "umbra/bessel.hpp"
#include "umbra/compensated.hpp"
#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/humbert.hpp"
#include "umbra/identities.hpp"
#include "umbra/policy.hpp"
#include "umbra/quadrature.hpp"
#include "umbra/struve.hpp"
#include "umbra/umbral.hpp"

#endif  // UMBRA_UMBRA_HPP
