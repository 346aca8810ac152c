#ifndef ASYMPROD_ASYMPROD_HPP
#define ASYMPROD_ASYMPROD_HPP

#include "asymprod/asymptotics.hpp"
#include "asymprod/catalog.hpp"
#include "asymprod/errors.hpp"
#include "asymprod/estimator.hpp"
#include "asymprod/exact_rational.hpp"
#include "asymprod/expression.hpp"
#include "asymprod/function_spec.hpp"
#include "asymprod/lemma_checks.hpp"
#include "asymprod/product.hpp"
#include "asymprod/summation.hpp"

#endif
