#pragma once

#include "field.hpp"
#include "linalg.hpp"
#include "dynkin.hpp"
#include "group.hpp"
#include "baut.hpp"
#include "meshcore.hpp"
#include "orbit.hpp"
#include "autom.hpp"
#include "invariants.hpp"
#include "homlab.hpp"
#include "report.hpp"
