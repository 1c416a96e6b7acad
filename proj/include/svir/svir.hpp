#pragma once

#include "svir/algebra.hpp"
#include "svir/errors.hpp"
#include "svir/generators.hpp"
#include "svir/halfint.hpp"
#include "svir/linalg.hpp"
#include "svir/modules.hpp"
#include "svir/morphisms.hpp"
#include "svir/parse.hpp"
#include "svir/poly.hpp"
#include "svir/quadrat.hpp"
#include "svir/rational.hpp"
#include "svir/report.hpp"
#include "svir/scalar.hpp"
#include "svir/structure.hpp"
