#pragma once

// Umbrella header: exact Pell-equation sequences, their generating
// functions, and the integer-point classification machinery.

#include "pellgf/integer.hpp"
#include "pellgf/rational.hpp"
#include "pellgf/pell.hpp"
#include "pellgf/sequences.hpp"
#include "pellgf/genfunc.hpp"
#include "pellgf/classifier.hpp"
#include "pellgf/classic.hpp"
#include "pellgf/oracle.hpp"
