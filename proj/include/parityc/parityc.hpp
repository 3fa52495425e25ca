#pragma once

// Umbrella header: the whole library.

#include "category.hpp"
#include "census.hpp"
#include "cochain.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "group.hpp"
#include "integrability.hpp"
#include "io.hpp"
#include "rng.hpp"
#include "verify.hpp"
