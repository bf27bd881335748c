#pragma once

#include "effprice/errors.hpp"
#include "effprice/format.hpp"
#include "effprice/hpi.hpp"
#include "effprice/ingest.hpp"
#include "effprice/month.hpp"
#include "effprice/mortgage.hpp"
#include "effprice/report.hpp"
#include "effprice/scenario.hpp"
#include "effprice/series.hpp"
