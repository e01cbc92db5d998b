#ifndef SELFSIM_SELFSIM_HPP
#define SELFSIM_SELFSIM_HPP

#include "catalog.hpp"
#include "dot.hpp"
#include "errors.hpp"
#include "level_quotient.hpp"
#include "orbital_scheme.hpp"
#include "parser.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "spectral.hpp"
#include "tree.hpp"
#include "verify.hpp"
#include "wreath.hpp"

#endif // SELFSIM_SELFSIM_HPP
