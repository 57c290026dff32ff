#pragma once

#include "builtins.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "reflection.hpp"
