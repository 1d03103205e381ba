#pragma once

// Umbrella header for the keyring extraction library.

#include "keyring/certificate.hpp"
#include "keyring/closure.hpp"
#include "keyring/cycle_search.hpp"
#include "keyring/errors.hpp"
#include "keyring/extract.hpp"
#include "keyring/generate.hpp"
#include "keyring/graph.hpp"
#include "keyring/heavy_cycle.hpp"
#include "keyring/io.hpp"
#include "keyring/oracle.hpp"
#include "keyring/stress.hpp"
