#pragma once

#include "lcdkit/code.hpp"
#include "lcdkit/distance.hpp"
#include "lcdkit/embed.hpp"
#include "lcdkit/error.hpp"
#include "lcdkit/families.hpp"
#include "lcdkit/field.hpp"
#include "lcdkit/fingerprint.hpp"
#include "lcdkit/matrix.hpp"
#include "lcdkit/matrix_io.hpp"
#include "lcdkit/parallel.hpp"
#include "lcdkit/search.hpp"
