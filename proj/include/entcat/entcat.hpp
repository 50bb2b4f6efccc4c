#pragma once

#include "entcat/catalysis.hpp"
#include "entcat/errors.hpp"
#include "entcat/majorization.hpp"
#include "entcat/probabilistic.hpp"
#include "entcat/rational.hpp"
#include "entcat/schmidt_vector.hpp"
#include "entcat/search.hpp"
