#pragma once

#include "crossfam/family.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/covers.hpp"
#include "crossfam/random.hpp"
#include "crossfam/constructions.hpp"
#include "crossfam/bounds.hpp"
#include "crossfam/certify.hpp"
#include "crossfam/parallel.hpp"
#include "crossfam/search.hpp"
#include "crossfam/io.hpp"
