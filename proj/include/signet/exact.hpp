#pragma once

#include "cyclotomic.hpp"
#include "interval.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"
