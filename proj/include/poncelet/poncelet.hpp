#ifndef PONCELET_PONCELET_HPP
#define PONCELET_PONCELET_HPP

#include "poncelet/core/error.hpp"
#include "poncelet/core/homogeneous.hpp"
#include "poncelet/core/matching.hpp"
#include "poncelet/core/mobius.hpp"
#include "poncelet/core/polynomial.hpp"
#include "poncelet/core/scalar.hpp"
#include "poncelet/lateral/correspondence.hpp"
#include "poncelet/lateral/forms.hpp"
#include "poncelet/lateral/sym2.hpp"
#include "poncelet/pyramid/canonical.hpp"
#include "poncelet/pyramid/closure.hpp"

#endif  // PONCELET_PONCELET_HPP
