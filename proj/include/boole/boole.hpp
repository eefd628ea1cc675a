#pragma once

#include "boole/errors.hpp"
#include "boole/identity.hpp"
#include "boole/matrix.hpp"
#include "boole/rational.hpp"
#include "boole/vandermonde.hpp"
