#pragma once

#include "susp/analyzer.hpp"
#include "susp/cli.hpp"
#include "susp/danielewski.hpp"
#include "susp/fforacle.hpp"
#include "susp/geometry.hpp"
#include "susp/groebner.hpp"
#include "susp/parser.hpp"
#include "susp/report_io.hpp"
#include "susp/resultant.hpp"
#include "susp/spec_file.hpp"
