#pragma once

#include "auslander/error.hpp"
#include "auslander/linalg.hpp"
#include "auslander/quiver.hpp"
#include "auslander/decompose.hpp"
#include "auslander/ext.hpp"
#include "auslander/algebra.hpp"
#include "auslander/ar.hpp"
#include "auslander/triangle.hpp"
#include "auslander/workspace.hpp"
