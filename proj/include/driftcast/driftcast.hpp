#pragma once

// Pollutant time-series clustering and weather-category forecasting:
// batch K-means, incremental assignment of new records, cluster labeling by
// dominant attribute, and matched-records forecast evaluation.

#include "driftcast/arff.hpp"
#include "driftcast/clustering.hpp"
#include "driftcast/csv.hpp"
#include "driftcast/evaluation.hpp"
#include "driftcast/format.hpp"
#include "driftcast/incremental.hpp"
#include "driftcast/labeling.hpp"
#include "driftcast/metric.hpp"
#include "driftcast/model_io.hpp"
#include "driftcast/preprocess.hpp"
#include "driftcast/synthetic.hpp"
#include "driftcast/types.hpp"
