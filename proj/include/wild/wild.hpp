#pragma once
// Umbrella header.

#include "birep.hpp"
#include "blocks.hpp"
#include "cube.hpp"
#include "error.hpp"
#include "gadgets/departition.hpp"
#include "gadgets/link.hpp"
#include "gadgets/matrix.hpp"
#include "gadgets/output.hpp"
#include "gadgets/pipeline.hpp"
#include "gadgets/tensor.hpp"
#include "gf.hpp"
#include "io.hpp"
#include "links.hpp"
#include "oracle/decide.hpp"
#include "oracle/orbit.hpp"
#include "oracle/pencil.hpp"
#include "oracle/poly.hpp"
#include "oracle/profile.hpp"
#include "sparse.hpp"
#include "verify.hpp"
