// Umbrella header.
#ifndef BURNSIDE_BURNSIDE_HPP
#define BURNSIDE_BURNSIDE_HPP

#include <burnside/cyclotomic.hpp>
#include <burnside/decision.hpp>
#include <burnside/matrix.hpp>
#include <burnside/order.hpp>
#include <burnside/polynomial.hpp>
#include <burnside/rational.hpp>
#include <burnside/realsign.hpp>
#include <burnside/reflective.hpp>
#include <burnside/spin4.hpp>
#include <burnside/stokes.hpp>
#include <burnside/verdict.hpp>
#include <burnside/word.hpp>

#endif
