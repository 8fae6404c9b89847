#pragma once

#include "citemet/dataset.hpp"
#include "citemet/format.hpp"
#include "citemet/ingest_types.hpp"
#include "citemet/metrics.hpp"
#include "citemet/parse.hpp"
#include "citemet/ranking.hpp"
#include "citemet/report.hpp"
#include "citemet/types.hpp"
