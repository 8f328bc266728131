#pragma once

#include "addsparse/algebra.hpp"
#include "addsparse/cover.hpp"
#include "addsparse/encoding.hpp"
#include "addsparse/generate.hpp"
#include "addsparse/hypergraph.hpp"
#include "addsparse/io.hpp"
#include "addsparse/optimality.hpp"
#include "addsparse/predicate.hpp"
#include "addsparse/random.hpp"
#include "addsparse/rational.hpp"
#include "addsparse/sparsifier.hpp"
#include "addsparse/sparsifier_types.hpp"
#include "addsparse/sweep.hpp"
#include "addsparse/verifier.hpp"
