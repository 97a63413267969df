#pragma once

#include "blambda.hpp"
#include "cache.hpp"
#include "chains.hpp"
#include "determinant.hpp"
#include "errata.hpp"
#include "families.hpp"
#include "identities.hpp"
#include "index_set.hpp"
#include "json_io.hpp"
#include "ladder.hpp"
#include "modular.hpp"
#include "numeric.hpp"
#include "painleve.hpp"
#include "partitions.hpp"
#include "point.hpp"
#include "poly.hpp"
#include "quad.hpp"
#include "quotient.hpp"
#include "rational.hpp"
#include "report_io.hpp"
