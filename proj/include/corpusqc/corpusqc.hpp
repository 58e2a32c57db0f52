#pragma once

#include "corpusqc/config.hpp"
#include "corpusqc/curate.hpp"
#include "corpusqc/dataset.hpp"
#include "corpusqc/error.hpp"
#include "corpusqc/ingest.hpp"
#include "corpusqc/jsonl.hpp"
#include "corpusqc/metrics.hpp"
#include "corpusqc/qualscan.hpp"
#include "corpusqc/report.hpp"
#include "corpusqc/stats.hpp"
#include "corpusqc/version.hpp"
