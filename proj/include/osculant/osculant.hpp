#pragma once

// Umbrella header for the whole library.

#include "osculant/bwspread.hpp"
#include "osculant/cayley.hpp"
#include "osculant/commands.hpp"
#include "osculant/error.hpp"
#include "osculant/field.hpp"
#include "osculant/idealprobe.hpp"
#include "osculant/klein.hpp"
#include "osculant/linalg.hpp"
#include "osculant/parallel.hpp"
#include "osculant/polyroots.hpp"
#include "osculant/projspace.hpp"
#include "osculant/report.hpp"
#include "osculant/sampling.hpp"
