#pragma once

#include "walkiso/bigint.hpp"
#include "walkiso/formats.hpp"
#include "walkiso/generators.hpp"
#include "walkiso/graph.hpp"
#include "walkiso/iso_test.hpp"
#include "walkiso/matrix.hpp"
#include "walkiso/op_counter.hpp"
#include "walkiso/oracle.hpp"
#include "walkiso/probe_harness.hpp"
#include "walkiso/refinement.hpp"
#include "walkiso/spectral.hpp"
