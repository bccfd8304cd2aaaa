#ifndef LEDC_LEDC_HPP
#define LEDC_LEDC_HPP

#include "ledc/code.hpp"
#include "ledc/construct.hpp"
#include "ledc/error.hpp"
#include "ledc/field.hpp"
#include "ledc/locality.hpp"
#include "ledc/matrix.hpp"
#include "ledc/poly.hpp"

#endif  // LEDC_LEDC_HPP
