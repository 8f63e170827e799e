#pragma once

// Umbrella header.
#include "hampath/error.hpp"
#include "hampath/graph.hpp"
#include "hampath/io.hpp"
#include "hampath/ratio.hpp"
#include "hampath/path.hpp"
#include "hampath/ham.hpp"
#include "hampath/metrics.hpp"
#include "hampath/hpc.hpp"
#include "hampath/families.hpp"
#include "hampath/corpus.hpp"
