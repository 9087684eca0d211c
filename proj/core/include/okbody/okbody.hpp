#pragma once

#include "okbody/errors.hpp"
#include "okbody/linalg.hpp"
#include "okbody/okounkov.hpp"
#include "okbody/picard.hpp"
#include "okbody/polyhedra.hpp"
#include "okbody/polynomial.hpp"
#include "okbody/rational.hpp"
#include "okbody/representation.hpp"
#include "okbody/rootsys.hpp"
#include "okbody/sections.hpp"
#include "okbody/univariate.hpp"
#include "okbody/valuation.hpp"
#include "okbody/variety.hpp"
#include "okbody/weights.hpp"
