#pragma once

#include "dblpt/completion.hpp"
#include "dblpt/corners.hpp"
#include "dblpt/error.hpp"
#include "dblpt/modular.hpp"
#include "dblpt/oracle.hpp"
#include "dblpt/partition.hpp"
#include "dblpt/render.hpp"
#include "dblpt/resolution.hpp"
#include "dblpt/romer.hpp"
#include "dblpt/scheme.hpp"
#include "dblpt/serialize.hpp"
#include "dblpt/shifts.hpp"
