#pragma once

#include "frieze/cylinder.hpp"
#include "frieze/detection.hpp"
#include "frieze/error.hpp"
#include "frieze/group.hpp"
#include "frieze/image.hpp"
#include "frieze/isometry.hpp"
#include "frieze/scalar.hpp"
#include "frieze/synthesis.hpp"
#include "frieze/table_check.hpp"
