#pragma once

#include "evotopo/bottleneck.hpp"
#include "evotopo/cluster.hpp"
#include "evotopo/complex_vectors.hpp"
#include "evotopo/complexes.hpp"
#include "evotopo/errors.hpp"
#include "evotopo/formats.hpp"
#include "evotopo/ingest.hpp"
#include "evotopo/netgen.hpp"
#include "evotopo/persistence.hpp"
#include "evotopo/plot.hpp"
#include "evotopo/types.hpp"
