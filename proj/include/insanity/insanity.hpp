#pragma once

#include "insanity/basis.hpp"
#include "insanity/block.hpp"
#include "insanity/coloring.hpp"
#include "insanity/cube_type.hpp"
#include "insanity/enumerate.hpp"
#include "insanity/errors.hpp"
#include "insanity/io.hpp"
#include "insanity/puzzle.hpp"
#include "insanity/rotations.hpp"
#include "insanity/tower.hpp"
