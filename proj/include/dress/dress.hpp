#pragma once

// Umbrella header: exact arithmetic in the rational-data slice of the
// minimal Dress ring of R(X), and certified idempotent factorizations of
// singular 2x2 row matrices over it.

#include "dress/certificate.hpp"
#include "dress/corpus.hpp"
#include "dress/dress_elem.hpp"
#include "dress/errors.hpp"
#include "dress/factor.hpp"
#include "dress/interval.hpp"
#include "dress/mat2.hpp"
#include "dress/parse.hpp"
#include "dress/poly.hpp"
#include "dress/rational.hpp"
#include "dress/search.hpp"
#include "dress/serialize.hpp"
#include "dress/sturm.hpp"
