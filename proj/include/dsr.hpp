#ifndef DSR_HPP
#define DSR_HPP

#include "dsr/core.hpp"
#include "dsr/error.hpp"
#include "dsr/io.hpp"
#include "dsr/majority.hpp"
#include "dsr/partitions.hpp"
#include "dsr/rational.hpp"
#include "dsr/scoring.hpp"
#include "dsr/solutions.hpp"

#endif  // DSR_HPP
