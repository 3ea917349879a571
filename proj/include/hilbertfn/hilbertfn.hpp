#pragma once

#include "error.hpp"
#include "sampler.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "polyspace.hpp"
#include "geometry.hpp"
#include "schemes.hpp"
#include "shape.hpp"
#include "params.hpp"
#include "postulation.hpp"
#include "apolarity.hpp"
#include "suites.hpp"
#include "io.hpp"
#include "report.hpp"
