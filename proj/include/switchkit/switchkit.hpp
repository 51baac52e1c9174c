#pragma once

#include "switchkit/canonical.hpp"
#include "switchkit/errors.hpp"
#include "switchkit/graph.hpp"
#include "switchkit/induced.hpp"
#include "switchkit/io.hpp"
#include "switchkit/lower.hpp"
#include "switchkit/nae.hpp"
#include "switchkit/oracle.hpp"
#include "switchkit/patterns.hpp"
#include "switchkit/recognize.hpp"
#include "switchkit/reduction.hpp"
#include "switchkit/upper.hpp"
#include "switchkit/vertex_set.hpp"
