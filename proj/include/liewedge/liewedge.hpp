#pragma once

#include "exact_linalg.hpp"
#include "iso.hpp"
#include "jordan.hpp"
#include "json_io.hpp"
#include "kkt.hpp"
#include "lie_core.hpp"
#include "props.hpp"
#include "realizations.hpp"
#include "tables.hpp"
#include "wedge.hpp"
