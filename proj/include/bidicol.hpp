#ifndef BIDICOL_HPP
#define BIDICOL_HPP

#include "bidicol/bench.hpp"
#include "bidicol/fixtures.hpp"
#include "bidicol/generators.hpp"
#include "bidicol/io.hpp"
#include "bidicol/oracle.hpp"
#include "bidicol/solver.hpp"

#endif
