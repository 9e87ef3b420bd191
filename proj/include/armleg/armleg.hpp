#pragma once

#include "armleg/anatomy.hpp"
#include "armleg/errors.hpp"
#include "armleg/explorer.hpp"
#include "armleg/parallel.hpp"
#include "armleg/partitions.hpp"
#include "armleg/qseries.hpp"
#include "armleg/statistics.hpp"
#include "armleg/verify_report.hpp"
