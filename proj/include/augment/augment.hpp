#pragma once

// Umbrella header.

#include "augment/core.hpp"
#include "augment/edge_aug.hpp"
#include "augment/flow_cut.hpp"
#include "augment/gomory_hu.hpp"
#include "augment/instance_io.hpp"
#include "augment/maxflow.hpp"
#include "augment/oracle.hpp"
#include "augment/solver_common.hpp"
#include "augment/verify.hpp"
#include "augment/vertex_aug.hpp"
