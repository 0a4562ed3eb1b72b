#pragma once

// Umbrella header.

#include "superrep/classify.hpp"
#include "superrep/field.hpp"
#include "superrep/graded_algebra.hpp"
#include "superrep/json_io.hpp"
#include "superrep/matrix.hpp"
#include "superrep/quiver.hpp"
#include "superrep/rep.hpp"
#include "superrep/species_of.hpp"
#include "superrep/superquiver.hpp"
#include "superrep/superspecies.hpp"
