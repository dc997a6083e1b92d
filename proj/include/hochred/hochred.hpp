#pragma once

#include "hochred/reduction.hpp"
#include "hochred/report.hpp"
#include "hochred/session.hpp"
